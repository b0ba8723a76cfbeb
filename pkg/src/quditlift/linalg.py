"""Small dense linear-algebra helpers used by validation and tests."""

from __future__ import annotations

import numpy as np


def unitarity_defect(matrix: np.ndarray) -> float:
    """Max-abs deviation of ``U^dag U`` from the identity."""
    mat = np.asarray(matrix, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    gram = mat.conj().T @ mat
    return float(np.max(np.abs(gram - np.eye(mat.shape[0]))))


def global_phase_between(a: np.ndarray, b: np.ndarray) -> complex:
    """Unit phase ``z`` minimizing ``||a - z*b||`` taken from the largest entry of b."""
    b = np.asarray(b, dtype=complex)
    a = np.asarray(a, dtype=complex)
    flat = np.argmax(np.abs(b))
    pivot = b.reshape(-1)[flat]
    if abs(pivot) == 0.0:
        return 1.0 + 0.0j
    ratio = a.reshape(-1)[flat] / pivot
    mag = abs(ratio)
    if mag == 0.0:
        return 1.0 + 0.0j
    return ratio / mag


def phase_aligned_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max-abs difference between ``a`` and ``b`` after removing global phase."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    phase = global_phase_between(a, b)
    return float(np.max(np.abs(a - phase * b)))


def embed_on_wire(matrix: np.ndarray, wire: int, dims: tuple[int, ...]) -> np.ndarray:
    """Kron-expand a one-wire matrix to the full register."""
    left = 1
    for d in dims[:wire]:
        left *= d
    right = 1
    for d in dims[wire + 1:]:
        right *= d
    return np.kron(np.kron(np.eye(left), np.asarray(matrix, dtype=complex)), np.eye(right))
