from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chernratio.exact_algebra import (
    Partition,
    as_rational,
    binomial,
    partitions_of,
    rational_str,
)

from oracles import partition_count, partitions_brute_force

rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize(
    "n,k,expected",
    [(3, 1, 3), (5, 0, 1), (7, 3, 35), (4, -1, 0), (4, 5, 0), (0, 0, 1)],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected
    assert isinstance(binomial(n, k), Fraction)


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_partitions_small():
    assert partitions_of(0) == [Partition()]
    assert [list(p) for p in partitions_of(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(partitions_of(10)) == 42


@pytest.mark.parametrize("n", range(21))
def test_partition_count_matches_recursive_counter(n):
    parts = partitions_of(n)
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)


@pytest.mark.parametrize("n", range(11))
def test_partitions_match_brute_force(n):
    assert {tuple(p) for p in partitions_of(n)} == partitions_brute_force(n)


@pytest.mark.parametrize("n", range(13))
def test_partitions_canonical_and_ordered(n):
    parts = partitions_of(n)
    for p in parts:
        assert list(p) == sorted(p, reverse=True)
        assert all(x > 0 for x in p)
        assert p.weight == n
    assert [tuple(p) for p in parts] == sorted((tuple(p) for p in parts), reverse=True)


def test_partition_canonicalizes_and_parses():
    assert Partition([1, 3]) == Partition([3, 1])
    assert Partition.parse("1,3") == Partition([3, 1])
    assert Partition.parse("[2,1,1]").weight == 4
    assert Partition.parse("[]") == Partition()
    assert str(Partition([3, 1])) == "[3,1]"
    assert Partition([3, 1]).to_json() == [3, 1]
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition.parse("3,a")


def test_rational_serialization():
    assert rational_str(Fraction(6, 4)) == "3/2"
    assert rational_str(Fraction(-6, 4)) == "-3/2"
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(Fraction(0, 5)) == "0"
    assert as_rational("-3/6") == Fraction(-1, 2)
    assert as_rational(" 7 ") == 7


def test_no_floats_allowed():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("x/2")


@given(rationals, rationals)
def test_add_sub_round_trip(a, b):
    assert (a + b) - b == a


@given(rationals, rationals.filter(bool))
def test_mul_div_round_trip(a, b):
    assert (a * b) / b == a


@given(rationals)
def test_serialization_round_trip(a):
    s = rational_str(a)
    assert as_rational(s) == a
    num, _, den = s.partition("/")
    assert not den or int(den) > 1
