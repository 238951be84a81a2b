import pytest
from hypothesis import given, strategies as st

from autoplex.bitstrings import (
    BitString,
    find_squares,
    is_k_power_free,
    lexlen_compare,
    occ,
    occ_block,
)

bits = st.text(alphabet="01", max_size=64)


def test_construction_and_text_roundtrip():
    x = BitString("0101")
    assert str(x) == "0101"
    assert len(x) == 4
    assert x[0] == 0 and x[1] == 1
    assert BitString.from_text(x.to_text()) == x


def test_rejects_non_binary():
    with pytest.raises(ValueError):
        BitString("012")


def test_concat_and_power():
    assert str(BitString("01") + BitString("10")) == "0110"
    assert str(BitString("01") * 3) == "010101"


@given(bits)
def test_packed_roundtrip(s):
    x = BitString(s)
    assert BitString.from_packed(x.to_packed()) == x


def test_occ_counts_overlapping():
    assert occ("00", "00100") == 2
    assert occ("11", "111") == 2
    assert occ("101", "10101") == 2
    assert occ("0", "") == 0


def test_occ_block_counts_aligned():
    assert occ_block("01", "010101") == 3
    assert occ_block("01", "001101") == 1
    assert occ_block("01", "001011") == 0


def test_find_squares_known():
    # 0101 contains the square (01)^2 at 0 and trivial half-length-1 squares none
    sq = find_squares(BitString("0101"), min_half=1)
    assert (0, 2) in sq
    assert all(str(BitString("0101"))[i : i + l] == str(BitString("0101"))[i + l : i + 2 * l] for i, l in sq)


def test_find_squares_min_half_filters():
    sq = find_squares(BitString("00110011"), min_half=4)
    assert sq == [(0, 4)]


@given(bits.filter(lambda s: len(s) >= 2))
def test_find_squares_are_squares(s):
    for i, l in find_squares(BitString(s), min_half=1):
        assert s[i : i + l] == s[i + l : i + 2 * l]


def test_k_power_free():
    assert is_k_power_free("0110", 3)
    assert not is_k_power_free("000", 3)
    assert not is_k_power_free("010101", 3)


def test_lexlen_compare_orders_by_length_first():
    assert lexlen_compare(BitString("1"), BitString("00")) < 0
    assert lexlen_compare(BitString("01"), BitString("00")) > 0
    assert lexlen_compare(BitString("01"), BitString("01")) == 0
