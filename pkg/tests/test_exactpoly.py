"""Polynomial arithmetic and number-theory helpers."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coordlat.exactpoly import (
    ONE,
    X,
    ZERO,
    Polynomial,
    arith,
    binom,
    combinatorial,
    derivative,
    double_factorial,
    eval_at,
    legendre,
    poly,
    power,
    primitive_integer_coeffs,
    series_expand,
    squarefree_decomposition,
    squarefree_part,
)

small_polys = st.lists(st.integers(-30, 30), min_size=1, max_size=7).map(poly)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_trailing_zeros_are_stripped():
    assert poly([1, 2, 0, 0]).degree == 1
    assert poly([0]).is_zero
    assert poly([]).is_zero


def test_basic_arithmetic():
    p = ONE + X
    assert (p * p).coeffs == (1, 2, 1)
    assert (p - p).is_zero
    assert (-p).coeffs == (-1, -1)
    assert (p * ZERO).is_zero
    assert p.scale(Fraction(1, 2)).coeffs == (Fraction(1, 2), Fraction(1, 2))


def test_power_matches_repeated_multiplication():
    p = poly([2, -1, 3])
    q = ONE
    for k in range(6):
        assert power(p, k) == q
        q = q * p
    with pytest.raises(ValueError):
        power(p, -1)


def test_eval_exact_rational():
    p = poly([1, Fraction(1, 3)])
    assert eval_at(p, Fraction(3, 2)) == Fraction(3, 2)
    assert eval_at(poly([0, 0, 1]), Fraction(-2, 3)) == Fraction(4, 9)


def test_derivative():
    assert derivative(poly([5, 3, 0, 2])).coeffs == (3, 0, 6)
    assert derivative(ONE).is_zero


def test_binomial_outside_range_is_zero():
    assert binom(5, 2) == 10
    assert binom(5, 7) == 0
    assert binom(5, -1) == 0
    assert combinatorial("binom", 6, 3) == 20


def test_double_factorial():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(5) == 15
    assert double_factorial(6) == 48
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_primitive_integer_coeffs():
    p = poly([Fraction(1, 2), Fraction(3, 4)])
    assert primitive_integer_coeffs(p) == (2, 3)
    assert primitive_integer_coeffs(poly([-4, -6])) == (-2, -3)
    # constants collapse to their sign once content is stripped
    assert primitive_integer_coeffs(poly([7])) == (1,)


def test_squarefree_decomposition_known_factors():
    # x^2 (x - 1): factors come out in ascending multiplicity order
    p = poly([0, 0, -1, 1])
    factors = squarefree_decomposition(p)
    assert [(f.coeffs, m) for f, m in factors] == [((-1, 1), 1), ((0, 1), 2)]

    sq = poly([1, 2, 1])
    assert squarefree_decomposition(sq) == ((poly([1, 1]), 2),)


def test_squarefree_part_and_profile():
    p = poly([0, 0, -1, 1])
    sf, profile = squarefree_part(p)
    assert sf == poly([0, -1, 1]) or sf == poly([0, 1, -1]).scale(-1)
    assert profile == ((1, 2), (1, 1))

    sf2, profile2 = squarefree_part(poly([-2, 0, 1]))
    assert sf2.degree == 2
    assert profile2 == ((2, 1),)


def test_series_expansion():
    assert series_expand(ONE, 1, 5) == (1, 1, 1, 1, 1, 1)
    # (1 + 4x + x^2) / (1-x)^2
    assert series_expand(poly([1, 4, 1]), 2, 3) == (1, 6, 12, 18)
    with pytest.raises(ValueError):
        series_expand(ONE, 0, 3)


def test_legendre_first_values():
    assert legendre(0) == ONE
    assert legendre(1) == X
    assert legendre(2).coeffs == (Fraction(-1, 2), 0, Fraction(3, 2))
    assert legendre(3).coeffs == (0, Fraction(-3, 2), 0, Fraction(5, 2))


def test_arith_dispatcher():
    p, q = poly([1, 1]), poly([1, -1])
    assert arith(p, q, "add") == poly([2])
    assert arith(p, q, "sub") == poly([0, 2])
    assert arith(p, q, "mul") == poly([1, 0, -1])


@given(small_polys, small_polys, rationals)
@settings(max_examples=60)
def test_product_evaluates_pointwise(p, q, t):
    assert eval_at(p * q, t) == eval_at(p, t) * eval_at(q, t)


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_degree_of_product(p, q):
    if p.is_zero or q.is_zero:
        assert (p * q).is_zero
    else:
        assert (p * q).degree == p.degree + q.degree


@given(small_polys)
@settings(max_examples=40)
def test_squarefree_factors_multiply_back(p):
    if p.is_zero or p.degree == 0:
        return
    parts = squarefree_decomposition(p)
    prod = ONE
    for f, m in parts:
        prod = prod * power(f, m)
    # equal up to the rational content removed by the factorization
    lead = p.coeffs[-1] / prod.coeffs[-1]
    assert prod.scale(lead) == p
