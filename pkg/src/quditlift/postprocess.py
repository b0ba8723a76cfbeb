"""Pulling qudit outcomes back to qubit bit strings and checking them.

Exact emulation of a correctly lowered circuit can only ever populate
encoded basis states, so any outcome off the image is treated as a loud
error rather than dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MappingError, NotInImageError, SupportViolationError
from .mapping import Mapping, decode_basis
from .registers import bit_key, parse_digit_key
from .simulator import Counts


@dataclass(frozen=True)
class ConsistencyReport:
    max_abs_diff: float
    off_image_mass: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_abs_diff <= self.tol and self.off_image_mass <= self.tol


def decode_counts(counts: Counts, mapping: Mapping) -> Counts:
    """Rewrite an outcome table through the inverse encoding."""
    if counts.dims != mapping.dims:
        raise MappingError(
            f"counts over dims {counts.dims} cannot decode through a "
            f"mapping onto {mapping.dims}"
        )
    decoded: dict[str, int] = {}
    violations: dict[str, int] = {}
    for key, tally in counts.counts.items():
        digits = parse_digit_key(key, counts.dims)
        try:
            bits = decode_basis(digits, mapping)
        except NotInImageError:
            violations[key] = tally
            continue
        out_key = bit_key(bits)
        # injective encoding: two distinct keys cannot decode alike
        assert out_key not in decoded
        decoded[out_key] = tally
    if violations:
        raise SupportViolationError(violations)
    return Counts(
        dims=(2,) * mapping.n,
        counts=decoded,
        shots=counts.shots,
        seed=counts.seed,
        generator=counts.generator,
    )


def pullback_distribution(
    qudit_dist: dict[str, float], mapping: Mapping
) -> tuple[dict[str, float], float]:
    """Distribution over decoded bit strings plus the stray probability
    mass sitting outside the image."""
    pulled: dict[str, float] = {}
    off_image = 0.0
    for key, p in qudit_dist.items():
        digits = parse_digit_key(key, mapping.dims)
        try:
            bits = decode_basis(digits, mapping)
        except NotInImageError:
            off_image += p
            continue
        pulled[bit_key(bits)] = pulled.get(bit_key(bits), 0.0) + p
    return pulled, off_image


def verify_consistency(
    qudit_dist: dict[str, float],
    qubit_dist: dict[str, float],
    mapping: Mapping,
    tol: float = 1e-9,
) -> ConsistencyReport:
    """Compare a qudit-register distribution, pulled back through the
    mapping, against a qubit-register distribution."""
    for label, dist in (("qudit", qudit_dist), ("qubit", qubit_dist)):
        total = sum(dist.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"{label} distribution sums to {total}, not 1")
    pulled, off_image = pullback_distribution(qudit_dist, mapping)
    keys = set(pulled) | set(qubit_dist)
    max_diff = max(
        (abs(pulled.get(k, 0.0) - qubit_dist.get(k, 0.0)) for k in keys),
        default=0.0,
    )
    return ConsistencyReport(max_diff, off_image, tol)


def total_variation_distance(p: dict[str, float], q: dict[str, float]) -> float:
    keys = set(p) | set(q)
    return 0.5 * sum(abs(p.get(k, 0.0) - q.get(k, 0.0)) for k in keys)
