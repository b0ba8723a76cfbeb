"""Circuit representation for qubit inputs and native qudit outputs.

Gates are frozen dataclasses so circuits hash and compare by value.
Matrices are stored as nested tuples of complex numbers; helpers convert
to and from numpy arrays at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gates as stdgates
from .errors import (
    CircuitError,
    DimensionMismatchError,
    DuplicateIndexError,
    IndexOutOfRangeError,
    NonUnitaryMatrixError,
    TooLargeError,
)
from .linalg import embed_on_wire, unitarity_defect
from .registers import digits_to_index, index_to_digits

Matrix = tuple[tuple[complex, ...], ...]

# Gate matrices supplied by callers must be unitary to this tolerance.
UNITARY_ATOL = 1e-10

# Dense unitary construction refuses registers above this total dimension.
MAX_DENSE_DIM = 4096


def matrix_to_array(matrix: Matrix) -> np.ndarray:
    return np.array(matrix, dtype=complex)


def array_to_matrix(array: np.ndarray) -> Matrix:
    arr = np.asarray(array, dtype=complex)
    return tuple(tuple(complex(v) for v in row) for row in arr)


# ---------------------------------------------------------------------------
# Qubit gates


@dataclass(frozen=True)
class Named1Q:
    """Fixed single-qubit gate addressed by name (h, x, y, z, s, t)."""

    name: str
    qubit: int


@dataclass(frozen=True)
class Rot1Q:
    """Parametrized single-qubit rotation (rx, ry, rz, u1)."""

    name: str
    qubit: int
    angle: float


@dataclass(frozen=True)
class Generic1Q:
    """Arbitrary unitary on one qubit."""

    qubit: int
    matrix: Matrix


@dataclass(frozen=True)
class CNOT:
    control: int
    target: int


@dataclass(frozen=True)
class CZ:
    control: int
    target: int


@dataclass(frozen=True)
class MCX:
    """X on ``target`` conditioned on every control being 1."""

    controls: tuple[int, ...]
    target: int


QubitGate = Named1Q | Rot1Q | Generic1Q | CNOT | CZ | MCX


@dataclass(frozen=True)
class QubitCircuit:
    n: int
    gates: tuple[QubitGate, ...] = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# Native qudit gates


@dataclass(frozen=True)
class Local1D:
    """Arbitrary unitary on a single qudit."""

    qudit: int
    matrix: Matrix


@dataclass(frozen=True)
class CtrlEmbedded:
    """Two-qudit gate: apply ``matrix`` to ``target`` when ``control``
    sits in one of ``levels``; identity otherwise."""

    control: int
    target: int
    levels: tuple[int, ...]
    matrix: Matrix


QuditGate = Local1D | CtrlEmbedded


@dataclass(frozen=True)
class QuditCircuit:
    dims: tuple[int, ...]
    gates: tuple[QuditGate, ...] = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# Builder shorthands


def h(qubit: int) -> Named1Q:
    return Named1Q("h", qubit)


def x(qubit: int) -> Named1Q:
    return Named1Q("x", qubit)


def y(qubit: int) -> Named1Q:
    return Named1Q("y", qubit)


def z(qubit: int) -> Named1Q:
    return Named1Q("z", qubit)


def s(qubit: int) -> Named1Q:
    return Named1Q("s", qubit)


def t(qubit: int) -> Named1Q:
    return Named1Q("t", qubit)


def rx(qubit: int, angle: float) -> Rot1Q:
    return Rot1Q("rx", qubit, angle)


def ry(qubit: int, angle: float) -> Rot1Q:
    return Rot1Q("ry", qubit, angle)


def rz(qubit: int, angle: float) -> Rot1Q:
    return Rot1Q("rz", qubit, angle)


def cnot(control: int, target: int) -> CNOT:
    return CNOT(control, target)


def cz(control: int, target: int) -> CZ:
    return CZ(control, target)


def mcx(controls: tuple[int, ...] | list[int], target: int) -> MCX:
    return MCX(tuple(controls), target)


# ---------------------------------------------------------------------------
# Validation


def qubit_gate_matrix(gate: Named1Q | Rot1Q | Generic1Q) -> np.ndarray:
    """2x2 matrix of a single-qubit gate."""
    if isinstance(gate, Named1Q):
        return stdgates.named_matrix(gate.name)
    if isinstance(gate, Rot1Q):
        return stdgates.rotation_matrix(gate.name, gate.angle)
    return matrix_to_array(gate.matrix)


def _check_wire(wire: int, count: int, label: str, gate_index: int | None) -> None:
    if not isinstance(wire, int) or isinstance(wire, bool) or not 0 <= wire < count:
        raise IndexOutOfRangeError(
            f"{label} {wire} out of range for register of {count}", gate_index
        )


def _check_matrix(matrix: Matrix, dim: int, gate_index: int | None) -> None:
    arr = matrix_to_array(matrix)
    if arr.shape != (dim, dim):
        raise DimensionMismatchError(
            f"matrix shape {arr.shape} does not match wire dimension {dim}", gate_index
        )
    defect = unitarity_defect(arr)
    if defect > UNITARY_ATOL:
        raise NonUnitaryMatrixError(
            f"matrix is not unitary (defect {defect:.3e})", gate_index
        )


def validate_qubit_gate(gate: QubitGate, n: int, gate_index: int | None = None) -> None:
    if isinstance(gate, Named1Q):
        if gate.name not in stdgates.NAMED_GATES:
            raise CircuitError(f"unknown gate name {gate.name!r}", gate_index)
        _check_wire(gate.qubit, n, "qubit", gate_index)
    elif isinstance(gate, Rot1Q):
        if gate.name not in stdgates.ROTATION_GATES:
            raise CircuitError(f"unknown rotation name {gate.name!r}", gate_index)
        _check_wire(gate.qubit, n, "qubit", gate_index)
    elif isinstance(gate, Generic1Q):
        _check_wire(gate.qubit, n, "qubit", gate_index)
        _check_matrix(gate.matrix, 2, gate_index)
    elif isinstance(gate, CNOT) or isinstance(gate, CZ):
        _check_wire(gate.control, n, "qubit", gate_index)
        _check_wire(gate.target, n, "qubit", gate_index)
        if gate.control == gate.target:
            raise DuplicateIndexError(
                f"control and target are both {gate.target}", gate_index
            )
    elif isinstance(gate, MCX):
        if len(gate.controls) == 0:
            raise CircuitError("mcx needs at least one control", gate_index)
        wires = list(gate.controls) + [gate.target]
        for wire in wires:
            _check_wire(wire, n, "qubit", gate_index)
        if len(set(wires)) != len(wires):
            raise DuplicateIndexError(
                f"repeated wire in mcx {tuple(wires)}", gate_index
            )
    else:
        raise CircuitError(f"unknown qubit gate {gate!r}", gate_index)


def validate_qubit_circuit(circuit: QubitCircuit) -> None:
    if circuit.n < 1:
        raise CircuitError(f"register needs at least one qubit, got {circuit.n}")
    for i, gate in enumerate(circuit.gates):
        validate_qubit_gate(gate, circuit.n, i)


def validate_qudit_gate(
    gate: QuditGate, dims: tuple[int, ...], gate_index: int | None = None
) -> None:
    m = len(dims)
    if isinstance(gate, Local1D):
        _check_wire(gate.qudit, m, "qudit", gate_index)
        _check_matrix(gate.matrix, dims[gate.qudit], gate_index)
    elif isinstance(gate, CtrlEmbedded):
        _check_wire(gate.control, m, "qudit", gate_index)
        _check_wire(gate.target, m, "qudit", gate_index)
        if gate.control == gate.target:
            raise DuplicateIndexError(
                f"control and target are both {gate.target}", gate_index
            )
        if len(gate.levels) == 0:
            raise CircuitError("control level set is empty", gate_index)
        if len(set(gate.levels)) != len(gate.levels):
            raise DuplicateIndexError(
                f"repeated control level in {gate.levels}", gate_index
            )
        for level in gate.levels:
            if not 0 <= level < dims[gate.control]:
                raise IndexOutOfRangeError(
                    f"control level {level} out of range for dimension {dims[gate.control]}",
                    gate_index,
                )
        _check_matrix(gate.matrix, dims[gate.target], gate_index)
    else:
        raise CircuitError(f"unknown qudit gate {gate!r}", gate_index)


def validate_qudit_circuit(circuit: QuditCircuit) -> None:
    if len(circuit.dims) < 1:
        raise CircuitError("register needs at least one qudit")
    for d in circuit.dims:
        if d < 2:
            raise CircuitError(f"qudit dimension {d} is below 2")
    for i, gate in enumerate(circuit.gates):
        validate_qudit_gate(gate, circuit.dims, i)


# ---------------------------------------------------------------------------
# Dense unitaries (reference route; kept separate from the simulator on
# purpose so the two can cross-check each other)


def _guard_dense(total: int) -> None:
    if total > MAX_DENSE_DIM:
        raise TooLargeError(
            f"register dimension {total} exceeds dense limit {MAX_DENSE_DIM}"
        )


def qubit_gate_unitary(gate: QubitGate, n: int) -> np.ndarray:
    """Full 2^n x 2^n matrix of one gate, built by explicit embedding."""
    dims = (2,) * n
    total = 1 << n
    if isinstance(gate, (Named1Q, Rot1Q, Generic1Q)):
        return embed_on_wire(qubit_gate_matrix(gate), gate.qubit, dims)
    if isinstance(gate, CNOT):
        return _controlled_permutation(n, (gate.control,), gate.target)
    if isinstance(gate, CZ):
        mat = np.eye(total, dtype=complex)
        cbit = n - 1 - gate.control
        tbit = n - 1 - gate.target
        for idx in range(total):
            if (idx >> cbit) & 1 and (idx >> tbit) & 1:
                mat[idx, idx] = -1.0
        return mat
    if isinstance(gate, MCX):
        return _controlled_permutation(n, gate.controls, gate.target)
    raise CircuitError(f"unknown qubit gate {gate!r}")


def _controlled_permutation(n: int, controls: tuple[int, ...], target: int) -> np.ndarray:
    total = 1 << n
    mask = 0
    for c in controls:
        mask |= 1 << (n - 1 - c)
    flip = 1 << (n - 1 - target)
    mat = np.zeros((total, total), dtype=complex)
    for col in range(total):
        row = col ^ flip if (col & mask) == mask else col
        mat[row, col] = 1.0
    return mat


def qubit_unitary(circuit: QubitCircuit) -> np.ndarray:
    validate_qubit_circuit(circuit)
    _guard_dense(1 << circuit.n)
    total = 1 << circuit.n
    u = np.eye(total, dtype=complex)
    for gate in circuit.gates:
        u = qubit_gate_unitary(gate, circuit.n) @ u
    return u


def qudit_gate_unitary(gate: QuditGate, dims: tuple[int, ...]) -> np.ndarray:
    if isinstance(gate, Local1D):
        return embed_on_wire(matrix_to_array(gate.matrix), gate.qudit, dims)
    if isinstance(gate, CtrlEmbedded):
        total = 1
        for d in dims:
            total *= d
        mat = np.zeros((total, total), dtype=complex)
        sub = matrix_to_array(gate.matrix)
        level_set = set(gate.levels)
        for col in range(total):
            digits = index_to_digits(col, dims)
            if digits[gate.control] in level_set:
                for out_level in range(dims[gate.target]):
                    amp = sub[out_level, digits[gate.target]]
                    if amp != 0:
                        moved = list(digits)
                        moved[gate.target] = out_level
                        mat[digits_to_index(tuple(moved), dims), col] += amp
            else:
                mat[col, col] = 1.0
        return mat
    raise CircuitError(f"unknown qudit gate {gate!r}")


def qudit_unitary(circuit: QuditCircuit) -> np.ndarray:
    validate_qudit_circuit(circuit)
    total = 1
    for d in circuit.dims:
        total *= d
    _guard_dense(total)
    u = np.eye(total, dtype=complex)
    for gate in circuit.gates:
        u = qudit_gate_unitary(gate, circuit.dims) @ u
    return u
