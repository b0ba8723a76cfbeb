"""Lowering of qubit circuits onto qudit registers.

Single-qubit gates and co-resident two-qubit gates become one local
qudit gate each. A multi-controlled X becomes a ladder: each control
carrier is compressed into a spare "flag" level conditioned on the
previous carrier, the target gate fires off the last flag, and the
compressions are undone in reverse. A Toffoli/CNOT expansion over clean
ancilla qubits provides the conventional baseline for comparison.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import circuits as ir
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
    array_to_matrix,
    qubit_gate_matrix,
    validate_qubit_circuit,
)
from .cost import ErrorModel, FidelityEstimate, TranspileReport, compare, count_gates, estimate_fidelity
from .errors import (
    InsufficientAncillasError,
    InsufficientFreeLevelsError,
    MappingError,
    NoFeasibleMappingError,
    NotSupportedError,
    TranspileError,
)
from .mapping import (
    DEFAULT_ENUMERATION_LIMIT,
    LevelBudget,
    Mapping,
    enumerate_mappings,
    trivial_mapping,
)


@dataclass
class LoweringContext:
    """Carries the placement and collects emitted native gates."""

    mapping: Mapping
    budget: LevelBudget
    gates: list[QuditGate] = field(default_factory=list)

    @classmethod
    def of(cls, mapping: Mapping) -> LoweringContext:
        return cls(mapping, LevelBudget.of(mapping))

    def emit(self, gate: QuditGate) -> None:
        self.gates.append(gate)


# ---------------------------------------------------------------------------
# Matrix builders. A qudit hosting a group of g qubits uses levels
# 0..2^g-1; level bit for group position k is (level >> (g-1-k)) & 1.


def _bit_mask(group_size: int, position: int) -> int:
    return 1 << (group_size - 1 - position)


def _levels_where_set(group_size: int, positions: list[int]) -> tuple[int, ...]:
    """Encoding levels whose bits at all given positions are 1."""
    mask = 0
    for k in positions:
        mask |= _bit_mask(group_size, k)
    return tuple(y for y in range(2 ** group_size) if (y & mask) == mask)


def _embedded_1q(dim: int, group_size: int, position: int, u2: np.ndarray) -> np.ndarray:
    """One-qubit unitary on the given bit of the encoding; identity on
    every spare level."""
    used = 2 ** group_size
    block = np.kron(
        np.kron(np.eye(2 ** position), u2),
        np.eye(2 ** (group_size - 1 - position)),
    )
    full = np.eye(dim, dtype=complex)
    full[:used, :used] = block
    return full


def _x_on_bit(dim: int, group_size: int, target_pos: int, cond_positions: list[int]) -> np.ndarray:
    """Flip one encoding bit on the levels where all condition bits are 1."""
    perm = np.arange(dim)
    mask = _bit_mask(group_size, target_pos)
    for y in _levels_where_set(group_size, cond_positions):
        perm[y] = y ^ mask
    mat = np.zeros((dim, dim), dtype=complex)
    mat[perm, np.arange(dim)] = 1.0
    return mat


def _z_on_bit(dim: int, group_size: int, target_pos: int, cond_positions: list[int]) -> np.ndarray:
    diag = np.ones(dim, dtype=complex)
    mask = _bit_mask(group_size, target_pos)
    for y in _levels_where_set(group_size, cond_positions):
        if y & mask:
            diag[y] = -1.0
    return np.diag(diag)


def _swap_levels(dim: int, pairs: list[tuple[int, int]]) -> np.ndarray:
    perm = np.arange(dim)
    for a, b in pairs:
        perm[a], perm[b] = perm[b], perm[a]
    mat = np.zeros((dim, dim), dtype=complex)
    mat[perm, np.arange(dim)] = 1.0
    return mat


# ---------------------------------------------------------------------------
# Per-gate lowering


def lower_single_qubit_gate(gate: Named1Q | Rot1Q | Generic1Q, ctx: LoweringContext) -> Local1D:
    j, k = ctx.mapping.locate(gate.qubit)
    dim = ctx.mapping.dims[j]
    full = _embedded_1q(dim, len(ctx.mapping.groups[j]), k, qubit_gate_matrix(gate))
    return Local1D(j, array_to_matrix(full))


def lower_cnot(control: int, target: int, ctx: LoweringContext) -> QuditGate:
    jc, kc = ctx.mapping.locate(control)
    jt, kt = ctx.mapping.locate(target)
    dims = ctx.mapping.dims
    gt = len(ctx.mapping.groups[jt])
    if jc == jt:
        return Local1D(jt, array_to_matrix(_x_on_bit(dims[jt], gt, kt, [kc])))
    gc = len(ctx.mapping.groups[jc])
    levels = _levels_where_set(gc, [kc])
    return CtrlEmbedded(
        jc, jt, levels, array_to_matrix(_x_on_bit(dims[jt], gt, kt, []))
    )


def lower_cz(control: int, target: int, ctx: LoweringContext) -> QuditGate:
    jc, kc = ctx.mapping.locate(control)
    jt, kt = ctx.mapping.locate(target)
    dims = ctx.mapping.dims
    gt = len(ctx.mapping.groups[jt])
    if jc == jt:
        return Local1D(jt, array_to_matrix(_z_on_bit(dims[jt], gt, kt, [kc])))
    gc = len(ctx.mapping.groups[jc])
    levels = _levels_where_set(gc, [kc])
    return CtrlEmbedded(
        jc, jt, levels, array_to_matrix(_z_on_bit(dims[jt], gt, kt, []))
    )


def lower_mcx(controls: tuple[int, ...], target: int, ctx: LoweringContext) -> list[QuditGate]:
    """Flag ladder for a multi-controlled X. Emits 2K - 1 two-qudit gates,
    K the number of carrier qudits not hosting the target."""
    mapping = ctx.mapping
    dims = mapping.dims
    jt, kt = mapping.locate(target)
    gt = len(mapping.groups[jt])

    by_carrier: dict[int, list[int]] = {}
    folded: list[int] = []
    for c in controls:
        j, k = mapping.locate(c)
        if j == jt:
            folded.append(k)
        else:
            by_carrier.setdefault(j, []).append(k)

    target_mat = array_to_matrix(_x_on_bit(dims[jt], gt, kt, folded))
    if not by_carrier:
        # every control shares the target's qudit
        return [Local1D(jt, target_mat)]

    zero_free = [j for j in by_carrier if not ctx.budget.free[j]]
    if len(zero_free) >= 2:
        raise InsufficientFreeLevelsError(
            f"carrier qudits {sorted(zero_free)} all lack spare levels; "
            "at most one such carrier can lead the ladder"
        )
    order = sorted(by_carrier, key=lambda j: (bool(ctx.budget.free[j]), j))

    # Carrier 1 is conditioned on its native satisfied levels; each later
    # carrier gets those levels swapped into spare levels so one flag
    # condition can stand in for all of its resident controls.
    compressions: list[CtrlEmbedded] = []
    prev = order[0]
    prev_flag = _levels_where_set(len(mapping.groups[prev]), by_carrier[prev])
    for j in order[1:]:
        satisfied = _levels_where_set(len(mapping.groups[j]), by_carrier[j])
        free = ctx.budget.free[j]
        if len(free) < len(satisfied):
            raise InsufficientFreeLevelsError(
                f"carrier qudit {j} needs {len(satisfied)} spare levels to "
                f"hold a flag, has {len(free)}"
            )
        flags = free[: len(satisfied)]
        perm = _swap_levels(dims[j], list(zip(satisfied, flags)))
        compressions.append(
            CtrlEmbedded(prev, j, prev_flag, array_to_matrix(perm))
        )
        prev = j
        prev_flag = flags

    target_gate = CtrlEmbedded(prev, jt, prev_flag, target_mat)
    return [*compressions, target_gate, *reversed(compressions)]


def transpile(circuit: QubitCircuit, mapping: Mapping) -> QuditCircuit:
    validate_qubit_circuit(circuit)
    if mapping.n != circuit.n:
        raise MappingError(
            f"mapping covers {mapping.n} qubits, circuit has {circuit.n}"
        )
    ctx = LoweringContext.of(mapping)
    for i, gate in enumerate(circuit.gates):
        try:
            if isinstance(gate, (Named1Q, Rot1Q, Generic1Q)):
                ctx.emit(lower_single_qubit_gate(gate, ctx))
            elif isinstance(gate, CNOT):
                ctx.emit(lower_cnot(gate.control, gate.target, ctx))
            elif isinstance(gate, CZ):
                ctx.emit(lower_cz(gate.control, gate.target, ctx))
            elif isinstance(gate, MCX):
                for g in lower_mcx(gate.controls, gate.target, ctx):
                    ctx.emit(g)
            else:
                raise NotSupportedError(f"cannot lower {type(gate).__name__}")
        except TranspileError as err:
            if err.gate_index is None:
                raise type(err)(err.message, gate_index=i) from None
            raise
    return QuditCircuit(mapping.dims, tuple(ctx.gates))


# ---------------------------------------------------------------------------
# Qubit baseline: multi-controlled X over clean ancillas, Toffolis spelled
# out as the usual 6-CNOT network.

_TDG = ((1 + 0j, 0j), (0j, cmath.exp(-1j * math.pi / 4)))


def _toffoli_network(c1: int, c2: int, tq: int) -> list[QubitGate]:
    return [
        ir.h(tq),
        ir.cnot(c2, tq),
        Generic1Q(tq, _TDG),
        ir.cnot(c1, tq),
        ir.t(tq),
        ir.cnot(c2, tq),
        Generic1Q(tq, _TDG),
        ir.cnot(c1, tq),
        ir.t(c2),
        ir.t(tq),
        ir.h(tq),
        ir.cnot(c1, c2),
        ir.t(c1),
        Generic1Q(c2, _TDG),
        ir.cnot(c1, c2),
    ]


def _mcx_over_ancillas(controls: tuple[int, ...], target: int, ancillas: list[int]) -> list[QubitGate]:
    k = len(controls)
    if k == 1:
        return [ir.cnot(controls[0], target)]
    if k == 2:
        return _toffoli_network(controls[0], controls[1], target)
    # AND-chain: anc[0] = c0&c1, anc[i] = c(i+1) & anc[i-1]
    compute: list[QubitGate] = []
    compute += _toffoli_network(controls[0], controls[1], ancillas[0])
    for i in range(1, k - 2):
        compute += _toffoli_network(controls[i + 1], ancillas[i - 1], ancillas[i])
    final = _toffoli_network(controls[k - 1], ancillas[k - 3], target)
    uncompute = []
    uncompute += _toffoli_network(controls[0], controls[1], ancillas[0])
    for i in range(1, k - 2):
        uncompute = _toffoli_network(controls[i + 1], ancillas[i - 1], ancillas[i]) + uncompute
    return compute + final + uncompute


@dataclass(frozen=True)
class BaselineCircuit:
    """Expansion over n + ancillas qubits using only 1-qubit gates and CNOTs."""

    circuit: QubitCircuit
    n: int
    ancillas: int

    @property
    def two_qubit_count(self) -> int:
        return sum(1 for g in self.circuit.gates if isinstance(g, CNOT))


def required_ancillas(circuit: QubitCircuit) -> int:
    req = 0
    for gate in circuit.gates:
        if isinstance(gate, MCX):
            req = max(req, len(gate.controls) - 2)
    return req


def baseline_qubit_lowering(circuit: QubitCircuit, ancillas: int) -> BaselineCircuit:
    validate_qubit_circuit(circuit)
    needed = required_ancillas(circuit)
    if ancillas < needed:
        raise InsufficientAncillasError(
            f"largest multi-controlled X needs {needed} clean ancillas, got {ancillas}"
        )
    anc = list(range(circuit.n, circuit.n + ancillas))
    out: list[QubitGate] = []
    for gate in circuit.gates:
        if isinstance(gate, (Named1Q, Rot1Q, Generic1Q, CNOT)):
            out.append(gate)
        elif isinstance(gate, CZ):
            out += [ir.h(gate.target), ir.cnot(gate.control, gate.target), ir.h(gate.target)]
        elif isinstance(gate, MCX):
            out += _mcx_over_ancillas(gate.controls, gate.target, anc)
        else:
            raise NotSupportedError(f"cannot expand {type(gate).__name__}")
    return BaselineCircuit(
        QubitCircuit(circuit.n + ancillas, tuple(out)), circuit.n, ancillas
    )


# ---------------------------------------------------------------------------
# Mapping search


def _trivial_estimate(circuit: QubitCircuit, dims: tuple[int, ...], model: ErrorModel) -> FidelityEstimate | None:
    if len(dims) < circuit.n:
        return None
    try:
        lowered = transpile(circuit, trivial_mapping(circuit.n, dims))
    except TranspileError:
        return None
    return estimate_fidelity(lowered, model)


def report_for_mapping(
    circuit: QubitCircuit, mapping: Mapping, model: ErrorModel | None = None
) -> tuple[QuditCircuit, TranspileReport]:
    """Transpile under a caller-chosen mapping and assemble the report."""
    model = model or ErrorModel()
    lowered = transpile(circuit, mapping)
    opt = estimate_fidelity(lowered, model)
    trivial = _trivial_estimate(circuit, mapping.dims, model)
    baseline = baseline_qubit_lowering(circuit, required_ancillas(circuit))
    report = compare(mapping, opt, trivial, baseline.two_qubit_count)
    return lowered, report


def select_mapping(
    circuit: QubitCircuit,
    dims: tuple[int, ...],
    model: ErrorModel | None = None,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> tuple[Mapping, QuditCircuit, TranspileReport]:
    """Pick the enumerated mapping with the highest estimated fidelity.

    Ties go to the candidate with fewer two-qudit gates, then to the one
    enumerated first. The one-qubit-per-qudit placement is always
    evaluated when it fits, even past the enumeration limit, so the
    winner is never worse than it.
    """
    validate_qubit_circuit(circuit)
    dims = tuple(dims)
    model = model or ErrorModel()
    candidates = enumerate_mappings(circuit.n, dims, limit)
    if len(dims) >= circuit.n:
        triv = trivial_mapping(circuit.n, dims)
        if triv not in candidates:
            candidates.append(triv)

    keep_local = 1.0 - model.rate_local()
    keep_ctrl = 1.0 - model.rate_ctrl()
    best: tuple[Mapping, QuditCircuit] | None = None
    best_score = -1.0
    best_two = -1
    for cand in candidates:
        try:
            lowered = transpile(circuit, cand)
        except TranspileError:
            continue
        single, two = count_gates(lowered)
        score = keep_local ** single * keep_ctrl ** two
        if best is None or score > best_score or (score == best_score and two < best_two):
            best = (cand, lowered)
            best_score = score
            best_two = two
    if best is None:
        raise NoFeasibleMappingError(
            f"no enumerated placement of {circuit.n} qubits onto {dims} transpiles"
        )

    mapping, lowered = best
    opt = estimate_fidelity(lowered, model)
    trivial = _trivial_estimate(circuit, dims, model)
    baseline = baseline_qubit_lowering(circuit, required_ancillas(circuit))
    report = compare(mapping, opt, trivial, baseline.two_qubit_count)
    return mapping, lowered, report
