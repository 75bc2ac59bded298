from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from threshfree.numeric import (
    SQRT2_LEFT,
    SQRT2_RIGHT,
    SQRT5,
    dyadic_midpoint,
    floor_exact,
    floor_plus_one,
    format_scalar,
    scalar_from_decimal,
    scalar_from_json,
    scalar_to_json,
    sign,
)


def test_decimal_parsing_is_exact():
    assert scalar_from_decimal("4.8") == Fraction(24, 5)
    assert scalar_from_decimal("-3.3") == Fraction(-33, 10)
    assert scalar_from_decimal("1e-9") == Fraction(1, 10**9)
    assert scalar_from_decimal("7/3") == Fraction(7, 3)


@pytest.mark.parametrize("bad", ["", "abc", "1.2.3", "nan", "inf", "1/0x"])
def test_decimal_parsing_rejects_garbage(bad):
    with pytest.raises(ValueError):
        scalar_from_decimal(bad)


def test_floor_plus_one_on_integers_and_fractions():
    assert floor_plus_one(Fraction(5)) == 6
    assert floor_plus_one(Fraction(29, 5)) == 6
    assert floor_plus_one(Fraction(-1, 2)) == 0
    assert floor_exact(Fraction(10, 2)).is_exact_integer
    assert not floor_exact(Fraction(11, 2)).is_exact_integer


def test_sign():
    assert (sign(Fraction(-2)), sign(Fraction(0)), sign(Fraction(1, 9))) == (-1, 0, 1)


def test_surrogates_are_close_to_the_irrationals():
    assert abs(float(SQRT2_RIGHT) - (2**0.5 - 1) / 2) < 1e-16
    assert abs(float(SQRT2_LEFT) - (-1 - 2**0.5) / 2) < 1e-16
    assert abs(float(SQRT5) - 5**0.5) < 1e-15


@given(st.fractions(min_value=-100, max_value=100), st.fractions(min_value=Fraction(1, 10**6), max_value=50))
def test_dyadic_midpoint_stays_in_middle_half(lo, width):
    hi = lo + width
    mid = dyadic_midpoint(lo, hi)
    assert lo < mid < hi
    assert lo + width / 4 <= mid <= hi - width / 4
    assert mid.denominator & (mid.denominator - 1) == 0


@given(st.fractions(max_denominator=10**6))
def test_json_round_trip(x):
    assert scalar_from_json(scalar_to_json(x)) == x
    assert Fraction(format_scalar(x)) == x
