"""Dense state-vector emulation with exact distributions and seeded sampling.

Amplitudes live in a flat complex128 vector indexed mixed-radix, wire 0
most significant. Gate application reshapes the vector so the touched
wires become explicit axes and contracts only those axes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circuits import (
    CNOT,
    CZ,
    MCX,
    CtrlEmbedded,
    Generic1Q,
    Local1D,
    Named1Q,
    QubitCircuit,
    QubitGate,
    QuditCircuit,
    QuditGate,
    Rot1Q,
    matrix_to_array,
    qubit_gate_matrix,
    validate_qubit_circuit,
    validate_qudit_circuit,
    validate_qudit_gate,
)
from .errors import CircuitError, TooLargeError
from .registers import digit_key, index_to_digits, total_dimension

GENERATOR_ID = "numpy-pcg64"

# Probabilities below this are treated as exactly zero when deciding
# which outcomes exist (keeps double-precision dust out of support sets).
SUPPORT_EPS = 1e-15

MAX_STATE_DIM = 1 << 24


@dataclass(eq=False)
class QuantumState:
    dims: tuple[int, ...]
    amplitudes: np.ndarray


@dataclass(frozen=True)
class Counts:
    """Measured outcome table plus everything needed to reproduce it."""

    dims: tuple[int, ...]
    counts: dict[str, int]
    shots: int
    seed: int
    generator: str = GENERATOR_ID


def init_state(dims: tuple[int, ...]) -> QuantumState:
    dims = tuple(dims)
    if not dims:
        raise CircuitError("register needs at least one wire")
    for d in dims:
        if d < 2:
            raise CircuitError(f"wire dimension {d} is below 2")
    total = total_dimension(dims)
    if total > MAX_STATE_DIM:
        raise TooLargeError(
            f"register dimension {total} exceeds state guard {MAX_STATE_DIM}"
        )
    amps = np.zeros(total, dtype=complex)
    amps[0] = 1.0
    return QuantumState(dims, amps)


def basis_state(dims: tuple[int, ...], index: int) -> QuantumState:
    state = init_state(dims)
    state.amplitudes[0] = 0.0
    state.amplitudes[index] = 1.0
    return state


def _axis_bounds(dims: tuple[int, ...], wire: int) -> tuple[int, int]:
    left = math.prod(dims[:wire])
    right = math.prod(dims[wire + 1:])
    return left, right


def _apply_one_site(amps: np.ndarray, dims: tuple[int, ...], wire: int, u: np.ndarray) -> np.ndarray:
    left, right = _axis_bounds(dims, wire)
    view = amps.reshape(left, dims[wire], right)
    return np.einsum("ij,ljr->lir", u, view).reshape(-1)


def _apply_ctrl(amps: np.ndarray, dims: tuple[int, ...], gate: CtrlEmbedded) -> np.ndarray:
    u = matrix_to_array(gate.matrix)
    a, b = sorted((gate.control, gate.target))
    left = math.prod(dims[:a])
    mid = math.prod(dims[a + 1:b])
    right = math.prod(dims[b + 1:])
    view = amps.reshape(left, dims[a], mid, dims[b], right)
    out = view.copy()
    if gate.control < gate.target:
        for s in gate.levels:
            out[:, s] = np.einsum("ij,lmjr->lmir", u, view[:, s])
    else:
        for s in gate.levels:
            out[:, :, :, s] = np.einsum("ij,ljmr->limr", u, view[:, :, :, s])
    return out.reshape(-1)


def apply_gate(state: QuantumState, gate: QuditGate) -> QuantumState:
    validate_qudit_gate(gate, state.dims)
    if isinstance(gate, Local1D):
        amps = _apply_one_site(
            state.amplitudes, state.dims, gate.qudit, matrix_to_array(gate.matrix)
        )
    else:
        amps = _apply_ctrl(state.amplitudes, state.dims, gate)
    return QuantumState(state.dims, amps)


def apply_qubit_gate(state: QuantumState, gate: QubitGate) -> QuantumState:
    """Qubit-register specialization; multi-controlled gates act by
    permuting or phasing basis indices directly."""
    n = len(state.dims)
    amps = state.amplitudes
    if isinstance(gate, (Named1Q, Rot1Q, Generic1Q)):
        out = _apply_one_site(amps, state.dims, gate.qubit, qubit_gate_matrix(gate))
        return QuantumState(state.dims, out)
    if isinstance(gate, (CNOT, MCX)):
        controls = (gate.control,) if isinstance(gate, CNOT) else gate.controls
        mask = 0
        for c in controls:
            mask |= 1 << (n - 1 - c)
        tmask = 1 << (n - 1 - gate.target)
        idx = np.arange(amps.size)
        sel = (idx & mask) == mask
        out = amps.copy()
        out[idx[sel]] = amps[idx[sel] ^ tmask]
        return QuantumState(state.dims, out)
    if isinstance(gate, CZ):
        cmask = 1 << (n - 1 - gate.control)
        tmask = 1 << (n - 1 - gate.target)
        idx = np.arange(amps.size)
        out = amps.copy()
        both = (idx & (cmask | tmask)) == (cmask | tmask)
        out[both] *= -1.0
        return QuantumState(state.dims, out)
    raise CircuitError(f"unknown qubit gate {gate!r}")


def evolve(state: QuantumState, circuit: QuditCircuit | QubitCircuit) -> QuantumState:
    if isinstance(circuit, QuditCircuit):
        if circuit.dims != state.dims:
            raise CircuitError(
                f"circuit dims {circuit.dims} do not match state dims {state.dims}"
            )
        validate_qudit_circuit(circuit)
        for gate in circuit.gates:
            state = apply_gate(state, gate)
        return state
    if state.dims != (2,) * circuit.n:
        raise CircuitError(
            f"qubit circuit needs dims {(2,) * circuit.n}, state has {state.dims}"
        )
    validate_qubit_circuit(circuit)
    for gate in circuit.gates:
        state = apply_qubit_gate(state, gate)
    return state


def run(circuit: QuditCircuit | QubitCircuit) -> QuantumState:
    if isinstance(circuit, QuditCircuit):
        return evolve(init_state(circuit.dims), circuit)
    return evolve(init_state((2,) * circuit.n), circuit)


def _support_probabilities(state: QuantumState) -> np.ndarray:
    probs = np.abs(state.amplitudes) ** 2
    probs[probs < SUPPORT_EPS] = 0.0
    return probs


def exact_distribution(state: QuantumState) -> dict[str, float]:
    probs = _support_probabilities(state)
    out: dict[str, float] = {}
    for flat in np.flatnonzero(probs):
        digits = index_to_digits(int(flat), state.dims)
        out[digit_key(digits, state.dims)] = float(probs[flat])
    return out


def sample(state: QuantumState, shots: int, seed: int) -> Counts:
    """Draw outcomes by inverse transform over index order; identical
    inputs and seed give identical tables."""
    if shots < 1:
        raise ValueError(f"shots must be positive, got {shots}")
    probs = _support_probabilities(state)
    cdf = np.cumsum(probs)
    rng = np.random.Generator(np.random.PCG64(seed))
    u = rng.random(shots) * cdf[-1]
    picks = np.searchsorted(cdf, u, side="right")
    picks = np.minimum(picks, probs.size - 1)
    counts: dict[str, int] = {}
    values, tallies = np.unique(picks, return_counts=True)
    for flat, tally in zip(values, tallies):
        digits = index_to_digits(int(flat), state.dims)
        counts[digit_key(digits, state.dims)] = int(tally)
    return Counts(state.dims, counts, shots, seed)
