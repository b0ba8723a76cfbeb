"""Qubit-to-qudit placements: encoding, decoding, and candidate enumeration.

A mapping assigns every qubit to exactly one qudit; a qudit holding m_j
qubits stores their joint state in its lowest 2^{m_j} levels via binary
encoding, first listed qubit as the high bit. Levels at or above 2^{m_j}
stay unused by the encoding and are available as scratch space.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .circuits import MAX_DENSE_DIM
from .errors import (
    IncompatibleRegisterError,
    InsufficientQuditsError,
    MappingError,
    NotInImageError,
    TooLargeError,
)
from .registers import digits_to_index, index_to_bits, total_dimension

DEFAULT_ENUMERATION_LIMIT = 10_000


def group_capacity(dim: int) -> int:
    """Largest qubit count a d-level qudit can host (2^count <= d)."""
    return dim.bit_length() - 1


@dataclass(frozen=True)
class Mapping:
    """Partition of qubits {0..n-1} into per-qudit ordered groups."""

    groups: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.groups) != len(self.dims):
            raise MappingError(
                f"{len(self.groups)} groups for {len(self.dims)} qudits"
            )
        seen: set[int] = set()
        for j, (group, dim) in enumerate(zip(self.groups, self.dims)):
            if dim < 2:
                raise MappingError(f"qudit {j} has dimension {dim}, below 2")
            if 2 ** len(group) > dim:
                raise MappingError(
                    f"qudit {j} holds {len(group)} qubits but dimension {dim} "
                    f"fits only {group_capacity(dim)}"
                )
            for q in group:
                if q in seen:
                    raise MappingError(f"qubit {q} assigned twice")
                seen.add(q)
        if seen != set(range(len(seen))):
            raise MappingError("groups must cover qubits 0..n-1 without gaps")

    @property
    def n(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def m(self) -> int:
        return len(self.dims)

    def locate(self, qubit: int) -> tuple[int, int]:
        """(qudit index, position inside its group) of a qubit."""
        for j, group in enumerate(self.groups):
            for k, q in enumerate(group):
                if q == qubit:
                    return j, k
        raise MappingError(f"qubit {qubit} not in mapping")


@dataclass(frozen=True)
class LevelBudget:
    """Per-qudit tally of encoding levels versus spare levels."""

    used: tuple[int, ...]
    free: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, mapping: Mapping) -> LevelBudget:
        used = tuple(2 ** len(g) for g in mapping.groups)
        free = tuple(
            tuple(range(u, d)) for u, d in zip(used, mapping.dims)
        )
        return cls(used, free)


def encode_basis(bits: tuple[int, ...], mapping: Mapping) -> tuple[int, ...]:
    """Digit string the mapping assigns to a qubit basis state."""
    if len(bits) != mapping.n:
        raise MappingError(f"expected {mapping.n} bits, got {len(bits)}")
    digits = []
    for group in mapping.groups:
        y = 0
        for q in group:
            y = (y << 1) | (bits[q] & 1)
        digits.append(y)
    return tuple(digits)


def decode_basis(digits: tuple[int, ...], mapping: Mapping) -> tuple[int, ...]:
    """Qubit basis state behind a digit string; fails off the image."""
    if len(digits) != mapping.m:
        raise MappingError(f"expected {mapping.m} digits, got {len(digits)}")
    bits = [0] * mapping.n
    for j, (group, y) in enumerate(zip(mapping.groups, digits)):
        if not 0 <= y < mapping.dims[j]:
            raise MappingError(
                f"digit {y} out of range for qudit {j} of dimension {mapping.dims[j]}"
            )
        if y >= 2 ** len(group):
            raise NotInImageError(
                f"qudit {j} at level {y} is outside the encoded range "
                f"0..{2 ** len(group) - 1}"
            )
        for k in range(len(group) - 1, -1, -1):
            bits[group[k]] = y & 1
            y >>= 1
    return tuple(bits)


def image_membership(digits: tuple[int, ...], mapping: Mapping) -> bool:
    try:
        decode_basis(digits, mapping)
    except NotInImageError:
        return False
    return True


def trivial_mapping(n: int, dims: tuple[int, ...]) -> Mapping:
    """One qubit per qudit, in index order; trailing qudits left empty."""
    if len(dims) < n:
        raise InsufficientQuditsError(
            f"{n} qubits need {n} qudits, register has {len(dims)}"
        )
    groups = tuple((q,) for q in range(n)) + ((),) * (len(dims) - n)
    return Mapping(groups, tuple(dims))


def iter_mappings(
    n: int, dims: tuple[int, ...], limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[Mapping]:
    """All capacity-respecting placements, lexicographic by group tuple.

    Groups are ordered sequences, so [0,1] and [1,0] are distinct
    candidates (they differ in which qubit takes the high bit).
    """
    dims = tuple(dims)
    if total_dimension(dims) < 2 ** n:
        raise IncompatibleRegisterError(
            f"register dimension {total_dimension(dims)} cannot hold {n} qubits"
        )
    caps = [group_capacity(d) for d in dims]
    # spare[j] = total capacity of qudits j..m-1, for pruning
    spare = [0] * (len(dims) + 1)
    for j in range(len(dims) - 1, -1, -1):
        spare[j] = spare[j + 1] + caps[j]

    groups: list[tuple[int, ...]] = []
    emitted = 0

    def arrangements(pool: tuple[int, ...], cap: int) -> Iterator[tuple[int, ...]]:
        # ordered selections from pool in lexicographic tuple order
        prefix: list[int] = []

        def rec(pool: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            yield tuple(prefix)
            if len(prefix) == cap:
                return
            for i, q in enumerate(pool):
                prefix.append(q)
                yield from rec(pool[:i] + pool[i + 1:])
                prefix.pop()

        yield from rec(pool)

    def walk(j: int, pool: tuple[int, ...]) -> Iterator[Mapping]:
        nonlocal emitted
        if emitted >= limit:
            return
        if j == len(dims):
            if not pool:
                emitted += 1
                yield Mapping(tuple(groups), dims)
            return
        if len(pool) > spare[j]:
            return
        for group in arrangements(pool, caps[j]):
            groups.append(group)
            rest = tuple(q for q in pool if q not in group)
            yield from walk(j + 1, rest)
            groups.pop()
            if emitted >= limit:
                return

    yield from walk(0, tuple(range(n)))


def enumerate_mappings(
    n: int, dims: tuple[int, ...], limit: int = DEFAULT_ENUMERATION_LIMIT
) -> list[Mapping]:
    return list(iter_mappings(n, dims, limit))


def encoded_index_table(mapping: Mapping) -> np.ndarray:
    """Flat register index of the encoding of each qubit basis state."""
    size = 2 ** mapping.n
    if size > MAX_DENSE_DIM * MAX_DENSE_DIM:
        raise TooLargeError(f"table of size {size} exceeds guard")
    table = np.empty(size, dtype=np.int64)
    for x in range(size):
        digits = encode_basis(index_to_bits(x, mapping.n), mapping)
        table[x] = digits_to_index(digits, mapping.dims)
    return table


def basis_isometry(mapping: Mapping) -> np.ndarray:
    """D x 2^n matrix whose column x is the encoded basis state of x."""
    total = total_dimension(mapping.dims)
    if total > MAX_DENSE_DIM:
        raise TooLargeError(
            f"register dimension {total} exceeds dense limit {MAX_DENSE_DIM}"
        )
    table = encoded_index_table(mapping)
    iso = np.zeros((total, 2 ** mapping.n), dtype=complex)
    iso[table, np.arange(2 ** mapping.n)] = 1.0
    return iso
