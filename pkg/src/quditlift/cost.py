"""Analytic fidelity estimation and transpilation reports.

Estimated circuit fidelity is the product of per-gate survival factors
(1 - error rate); the rate depends only on the gate kind so the estimate
reduces to a function of the gate counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuits import CtrlEmbedded, Local1D, QuditCircuit
from .mapping import Mapping


@dataclass(frozen=True)
class ErrorModel:
    """Per-gate Pauli error rates. Defaults keep the two-qudit rate an
    order of magnitude above the single-qudit rate."""

    e1: float = 0.001
    e2: float = 0.01
    overrides: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for label, rate in [("e1", self.e1), ("e2", self.e2)] + [
            (f"overrides[{k!r}]", v) for k, v in self.overrides.items()
        ]:
            if not 0.0 <= rate < 1.0:
                raise ValueError(f"{label} = {rate} outside [0, 1)")
        for kind in self.overrides:
            if kind not in ("local", "ctrl"):
                raise ValueError(f"unknown gate kind {kind!r} in overrides")

    def rate_local(self) -> float:
        return self.overrides.get("local", self.e1)

    def rate_ctrl(self) -> float:
        return self.overrides.get("ctrl", self.e2)


@dataclass(frozen=True)
class FidelityEstimate:
    value: float
    single_qudit_gates: int
    two_qudit_gates: int


def count_gates(circuit: QuditCircuit) -> tuple[int, int]:
    """(single-qudit count, two-qudit count)."""
    single = sum(1 for g in circuit.gates if isinstance(g, Local1D))
    two = sum(1 for g in circuit.gates if isinstance(g, CtrlEmbedded))
    return single, two


def estimate_fidelity(
    circuit: QuditCircuit, model: ErrorModel | None = None
) -> FidelityEstimate:
    model = model or ErrorModel()
    value = 1.0
    for gate in circuit.gates:
        if isinstance(gate, Local1D):
            value *= 1.0 - model.rate_local()
        else:
            value *= 1.0 - model.rate_ctrl()
    single, two = count_gates(circuit)
    return FidelityEstimate(value, single, two)


@dataclass(frozen=True)
class TranspileReport:
    mapping: Mapping
    two_qudit_gates: int
    single_qudit_gates: int
    baseline_two_qubit_gates: int | None
    fidelity_opt: float
    fidelity_trivial: float | None

    @property
    def fidelity_ratio(self) -> float | None:
        if self.fidelity_trivial is None or self.fidelity_trivial == 0.0:
            return None
        return self.fidelity_opt / self.fidelity_trivial


def compare(
    mapping: Mapping,
    opt: FidelityEstimate,
    trivial: FidelityEstimate | None,
    baseline_two_qubit_gates: int | None,
) -> TranspileReport:
    return TranspileReport(
        mapping=mapping,
        two_qudit_gates=opt.two_qudit_gates,
        single_qudit_gates=opt.single_qudit_gates,
        baseline_two_qubit_gates=baseline_two_qubit_gates,
        fidelity_opt=opt.value,
        fidelity_trivial=None if trivial is None else trivial.value,
    )
