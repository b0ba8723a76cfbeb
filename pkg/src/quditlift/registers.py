"""Mixed-radix index arithmetic and outcome-key formatting.

Register convention used everywhere in this package: wire 0 is the most
significant digit. For a qudit register with dimensions ``dims`` the flat
index of digits ``(y_0, ..., y_{m-1})`` is ``y_0 * prod(dims[1:]) + ...``;
for qubits this is the usual big-endian bit string read left to right.
"""

from __future__ import annotations

import math


def total_dimension(dims: tuple[int, ...]) -> int:
    return math.prod(dims)


def digits_to_index(digits: tuple[int, ...], dims: tuple[int, ...]) -> int:
    if len(digits) != len(dims):
        raise ValueError(f"expected {len(dims)} digits, got {len(digits)}")
    index = 0
    for digit, dim in zip(digits, dims):
        if not 0 <= digit < dim:
            raise ValueError(f"digit {digit} out of range for dimension {dim}")
        index = index * dim + digit
    return index


def index_to_digits(index: int, dims: tuple[int, ...]) -> tuple[int, ...]:
    span = total_dimension(dims)
    if not 0 <= index < span:
        raise ValueError(f"index {index} out of range for register of size {span}")
    out = [0] * len(dims)
    for pos in range(len(dims) - 1, -1, -1):
        index, out[pos] = divmod(index, dims[pos])
    return tuple(out)


def bits_to_index(bits: tuple[int, ...]) -> int:
    index = 0
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"bit {bit} is not 0 or 1")
        index = (index << 1) | bit
    return index


def index_to_bits(index: int, n: int) -> tuple[int, ...]:
    if not 0 <= index < (1 << n):
        raise ValueError(f"index {index} out of range for {n} qubits")
    return tuple((index >> (n - 1 - k)) & 1 for k in range(n))


def digit_key(digits: tuple[int, ...], dims: tuple[int, ...]) -> str:
    """Render a measurement outcome as a string key.

    Compact form (one character per wire) whenever every dimension fits in
    a single decimal digit; dash-separated decimal otherwise.
    """
    if len(digits) != len(dims):
        raise ValueError(f"expected {len(dims)} digits, got {len(digits)}")
    for digit, dim in zip(digits, dims):
        if not 0 <= digit < dim:
            raise ValueError(f"digit {digit} out of range for dimension {dim}")
    if max(dims) <= 10:
        return "".join(str(d) for d in digits)
    return "-".join(str(d) for d in digits)


def parse_digit_key(key: str, dims: tuple[int, ...]) -> tuple[int, ...]:
    if max(dims) <= 10:
        if len(key) != len(dims):
            raise ValueError(f"key {key!r} has {len(key)} digits, expected {len(dims)}")
        parts = list(key)
    else:
        parts = key.split("-")
        if len(parts) != len(dims):
            raise ValueError(f"key {key!r} has {len(parts)} fields, expected {len(dims)}")
    digits = []
    for pos, part in enumerate(parts):
        if not part.isdigit():
            raise ValueError(f"key {key!r}: field {pos} is not a number")
        value = int(part)
        if value >= dims[pos]:
            raise ValueError(f"key {key!r}: digit {value} out of range for dimension {dims[pos]}")
        digits.append(value)
    return tuple(digits)


def bit_key(bits: tuple[int, ...]) -> str:
    return "".join(str(b) for b in bits)


def parse_bit_key(key: str, n: int) -> tuple[int, ...]:
    if len(key) != n:
        raise ValueError(f"key {key!r} has {len(key)} bits, expected {n}")
    bits = []
    for ch in key:
        if ch not in "01":
            raise ValueError(f"key {key!r} contains a non-bit character")
        bits.append(int(ch))
    return tuple(bits)
