from fractions import Fraction

import pytest

from superext.scalars import (GaussianRational, ONE, ZERO, I, as_scalar,
                              format_scalar, parse_scalar, sqrt_scalar)


def test_arithmetic_is_exact():
    a = GaussianRational(Fraction(1, 3), Fraction(-2, 5))
    b = GaussianRational(Fraction(2, 7), Fraction(1, 2))
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a * b) / b == a
    assert -a + a == ZERO
    assert a * ONE == a
    assert I * I == as_scalar(-1)


def test_division_by_gaussian_integer():
    z = GaussianRational(1, 1)
    assert (ONE / z) * z == ONE
    assert (GaussianRational(2, 0) / GaussianRational(0, 1)
            == GaussianRational(0, -2))


def test_truthiness_and_equality():
    assert not GaussianRational(0, 0)
    assert GaussianRational(Fraction(2, 4)) == GaussianRational(
        Fraction(1, 2))
    assert as_scalar(3) == GaussianRational(3)
    assert as_scalar(Fraction(-1, 2)).re == Fraction(-1, 2)


def test_format_parse_round_trip():
    samples = [ZERO, ONE, as_scalar(-5), I,
               GaussianRational(Fraction(3, 7), Fraction(-2, 9)),
               GaussianRational(0, Fraction(5, 4)),
               GaussianRational(Fraction(-1, 2), 0)]
    for z in samples:
        assert parse_scalar(format_scalar(z)) == z


def test_sqrt_of_squares():
    for z in [as_scalar(Fraction(9, 4)), as_scalar(-4), I * 4,
              GaussianRational(3, 4), ONE, ZERO]:
        r = sqrt_scalar(z * z)
        assert r * r == z * z


def test_sqrt_returns_none_for_non_squares():
    assert sqrt_scalar(as_scalar(2)) is None
    assert sqrt_scalar(GaussianRational(1, 1)) is None
