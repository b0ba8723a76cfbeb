"""Standard single-qubit matrices and parametrized rotations."""

from __future__ import annotations

import math

import numpy as np

_SQRT1_2 = 1.0 / math.sqrt(2.0)

# Fixed 2x2 gates addressed by lowercase name.
_NAMED: dict[str, np.ndarray] = {
    "h": np.array([[_SQRT1_2, _SQRT1_2], [_SQRT1_2, -_SQRT1_2]], dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "s": np.array([[1, 0], [0, 1j]], dtype=complex),
    "t": np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
}

NAMED_GATES = tuple(sorted(_NAMED))
ROTATION_GATES = ("rx", "ry", "rz")


def named_matrix(name: str) -> np.ndarray:
    try:
        return _NAMED[name].copy()
    except KeyError:
        raise ValueError(f"unknown gate name {name!r}") from None


def rotation_matrix(name: str, angle: float) -> np.ndarray:
    half = angle / 2.0
    if name == "rx":
        return np.array(
            [[math.cos(half), -1j * math.sin(half)],
             [-1j * math.sin(half), math.cos(half)]],
            dtype=complex,
        )
    if name == "ry":
        return np.array(
            [[math.cos(half), -math.sin(half)],
             [math.sin(half), math.cos(half)]],
            dtype=complex,
        )
    if name == "rz":
        return np.array(
            [[np.exp(-1j * half), 0], [0, np.exp(1j * half)]], dtype=complex
        )
    raise ValueError(f"unknown rotation name {name!r}")
