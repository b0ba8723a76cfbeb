import pytest

from quditlift.registers import (
    bit_key,
    bits_to_index,
    digit_key,
    digits_to_index,
    index_to_bits,
    index_to_digits,
    parse_bit_key,
    parse_digit_key,
    total_dimension,
)


def test_total_dimension():
    assert total_dimension((4, 4, 4, 4)) == 256
    assert total_dimension((3,)) == 3


def test_mixed_radix_round_trip():
    dims = (3, 4, 2)
    for index in range(24):
        digits = index_to_digits(index, dims)
        assert digits_to_index(digits, dims) == index
    # wire 0 is the most significant digit
    assert digits_to_index((1, 0, 0), dims) == 8
    assert index_to_digits(23, dims) == (2, 3, 1)


def test_bit_round_trip():
    assert bits_to_index((1, 0, 1)) == 5
    assert index_to_bits(5, 3) == (1, 0, 1)
    for x in range(16):
        assert bits_to_index(index_to_bits(x, 4)) == x


def test_digit_index_range_checks():
    with pytest.raises(ValueError):
        digits_to_index((3,), (3,))
    with pytest.raises(ValueError):
        digits_to_index((0, 0), (3,))
    with pytest.raises(ValueError):
        index_to_digits(12, (3, 4))
    with pytest.raises(ValueError):
        index_to_digits(-1, (3, 4))


def test_digit_key_compact():
    assert digit_key((3, 1, 1, 1), (4, 4, 4, 4)) == "3111"
    assert parse_digit_key("3111", (4, 4, 4, 4)) == (3, 1, 1, 1)


def test_digit_key_wide_dims_use_dashes():
    assert digit_key((11, 2), (12, 3)) == "11-2"
    assert parse_digit_key("11-2", (12, 3)) == (11, 2)


def test_digit_key_rejects_out_of_range():
    with pytest.raises(ValueError):
        digit_key((4, 0), (4, 4))
    with pytest.raises(ValueError):
        parse_digit_key("41", (4, 4))
    with pytest.raises(ValueError):
        parse_digit_key("311", (4, 4, 4, 4))
    with pytest.raises(ValueError):
        parse_digit_key("3x11", (4, 4, 4, 4))


def test_bit_keys():
    assert bit_key((1, 0, 1, 1)) == "1011"
    assert parse_bit_key("1011", 4) == (1, 0, 1, 1)
    with pytest.raises(ValueError):
        parse_bit_key("10", 3)
    with pytest.raises(ValueError):
        parse_bit_key("102", 3)
