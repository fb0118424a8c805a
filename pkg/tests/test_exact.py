from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from circulant_resistance.exact import fib, format_exact, lucas, parse_exact


def naive_fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def naive_lucas(k):
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("k, expected", [(0, 0), (1, 1), (2, 1), (3, 2), (11, 89)])
def test_fib_small(k, expected):
    assert fib(k) == expected


def test_fib_eleven_by_iteration():
    assert naive_fib(11) == 89 == fib(11)


@pytest.mark.parametrize("k, expected", [(0, 2), (1, 1), (6, 18)])
def test_lucas_small(k, expected):
    assert lucas(k) == expected
    assert naive_lucas(k) == expected


def test_lucas_from_fib_square():
    l = 3
    assert 5 * fib(l) ** 2 + 2 * (-1) ** l == lucas(2 * l) == 18


def test_fast_doubling_matches_iteration():
    a, b = 0, 1
    for k in range(1001):
        assert fib(k) == a
        a, b = b, a + b


def test_large_index_exact():
    # F_{10^4} has 2090 digits; check the defining recurrence at that size
    k = 10_000
    assert fib(k + 1) == fib(k) + fib(k - 1)
    assert len(str(fib(k))) == 2090


@pytest.mark.parametrize("l", range(1, 201))
def test_lucas_fibonacci_identities(l):
    sign = (-1) ** l
    assert 5 * fib(l) ** 2 == lucas(2 * l) - 2 * sign
    assert lucas(2 * l) == fib(2 * l + 2) - fib(2 * l - 2)
    assert fib(2 * l) == fib(l + 1) ** 2 - fib(l - 1) ** 2


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        fib(-1)
    with pytest.raises(ValueError):
        lucas(-3)


fractions = st.fractions(max_denominator=10**6).filter(lambda q: abs(q) < 10**9)


@given(fractions, fractions, fractions)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    for r in (a + b, a * b, a - c):
        assert r.denominator > 0
        assert gcd(r.numerator, r.denominator) == 1


@given(fractions)
def test_format_parse_roundtrip(q):
    assert parse_exact(format_exact(q)) == q


def test_format_shapes():
    assert format_exact(Fraction(10, 24)) == "5/12"
    assert format_exact(Fraction(4)) == "4"
    assert format_exact(Fraction(-3, 6)) == "-1/2"
    with pytest.raises(ValueError):
        parse_exact("1/0")
    with pytest.raises(ValueError):
        parse_exact("x")
