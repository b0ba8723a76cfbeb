"""Shared test oracles and randomized-instance generators.

Oracles here are deliberately independent of the package's lowering and
simulation internals: permutation matrices are built from bit arithmetic,
and equivalence checks go through explicit isometry columns.
"""

from __future__ import annotations

import numpy as np

from quditlift import circuits as ir
from quditlift.circuits import QubitCircuit, QuditCircuit, qubit_unitary
from quditlift.errors import TranspileError
from quditlift.linalg import phase_aligned_distance
from quditlift.mapping import Mapping, encoded_index_table, group_capacity
from quditlift.simulator import basis_state, evolve
from quditlift.transpiler import transpile


def reference_circuit() -> QubitCircuit:
    """The shipped 5-qubit demo: CNOT, Hadamard layer, 4-control X."""
    return QubitCircuit(5, (
        ir.cnot(1, 3),
        ir.h(0), ir.h(1), ir.h(2), ir.h(3),
        ir.mcx((0, 1, 2, 3), 4),
    ))


def reference_mapping() -> Mapping:
    return Mapping(((1, 3), (0,), (2,), (4,)), (4, 4, 4, 4))


def mcx_permutation(n: int, controls: tuple[int, ...], target: int) -> np.ndarray:
    """Dense multi-controlled-X built from bit arithmetic alone."""
    size = 1 << n
    mask = 0
    for c in controls:
        mask |= 1 << (n - 1 - c)
    tmask = 1 << (n - 1 - target)
    mat = np.zeros((size, size), dtype=complex)
    for col in range(size):
        row = col ^ tmask if (col & mask) == mask else col
        mat[row, col] = 1.0
    return mat


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    raw = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(raw)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_qubit_circuit(
    rng: np.random.Generator,
    n: int,
    gate_count: int,
    kinds: tuple[str, ...] = ("h", "x", "t", "cnot", "cz", "mcx"),
) -> QubitCircuit:
    gates = []
    for _ in range(gate_count):
        kind = kinds[rng.integers(len(kinds))]
        if kind in ("h", "x", "t", "y", "z", "s"):
            gates.append(ir.Named1Q(kind, int(rng.integers(n))))
        elif kind in ("rx", "ry", "rz"):
            gates.append(ir.Rot1Q(kind, int(rng.integers(n)), float(rng.uniform(0, 2 * np.pi))))
        elif kind == "u1":
            gates.append(ir.Generic1Q(int(rng.integers(n)), ir.array_to_matrix(random_unitary_2x2(rng))))
        elif kind == "cnot":
            c, t = rng.choice(n, size=2, replace=False)
            gates.append(ir.cnot(int(c), int(t)))
        elif kind == "cz":
            c, t = rng.choice(n, size=2, replace=False)
            gates.append(ir.cz(int(c), int(t)))
        elif kind == "mcx":
            k = int(rng.integers(1, n))
            wires = rng.choice(n, size=k + 1, replace=False)
            gates.append(ir.mcx(tuple(int(w) for w in wires[:-1]), int(wires[-1])))
        else:
            raise ValueError(kind)
    return QubitCircuit(n, tuple(gates))


def rand_mapping(rng: np.random.Generator, n: int, dims: tuple[int, ...]) -> Mapping:
    """One random capacity-respecting placement (not necessarily lowerable)."""
    while True:
        groups: list[list[int]] = [[] for _ in dims]
        order = list(rng.permutation(n))
        ok = True
        for q in order:
            slots = [j for j, g in enumerate(groups) if len(g) < group_capacity(dims[j])]
            if not slots:
                ok = False
                break
            groups[int(rng.choice(slots))].append(int(q))
        if ok:
            return Mapping(tuple(tuple(g) for g in groups), dims)


def rand_feasible_instance(
    rng: np.random.Generator,
    circuit: QubitCircuit,
    dims: tuple[int, ...],
    tries: int = 300,
) -> tuple[Mapping, QuditCircuit]:
    """A random mapping under which the circuit actually lowers."""
    for _ in range(tries):
        mapping = rand_mapping(rng, circuit.n, dims)
        try:
            return mapping, transpile(circuit, mapping)
        except TranspileError:
            continue
    raise AssertionError(f"no feasible mapping found for dims {dims}")


def rand_dims(rng: np.random.Generator, n: int, choices=(3, 4, 5)) -> tuple[int, ...]:
    """Register dimensions that can hold n qubits, mixed d in 3..5."""
    while True:
        m = int(rng.integers((n + 1) // 2, n + 2))
        dims = tuple(int(rng.choice(choices)) for _ in range(m))
        if sum(group_capacity(d) for d in dims) >= n:
            return dims


def equivalence_defect(
    circuit: QubitCircuit, lowered: QuditCircuit, mapping: Mapping
) -> tuple[float, float]:
    """(phase-aligned unitary distance on the encoded subspace, max
    amplitude leaked off the image). Columns come from the simulator, the
    reference from dense qubit embedding: two independent routes."""
    table = encoded_index_table(mapping)
    size = 2 ** circuit.n
    block = np.zeros((size, size), dtype=complex)
    leak = 0.0
    off = np.ones(int(np.prod(mapping.dims)), dtype=bool)
    off[table] = False
    for x in range(size):
        col = evolve(basis_state(mapping.dims, int(table[x])), lowered).amplitudes
        block[:, x] = col[table]
        if off.any():
            leak = max(leak, float(np.abs(col[off]).max()))
    return phase_aligned_distance(block, qubit_unitary(circuit)), leak
