from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gcinterp.errors import DegreeOverflow
from gcinterp.geometry import Line, Point, canonical, point_on_line, points_on_line
from gcinterp.polynomials import (
    Poly2,
    divide_by_line,
    evaluate,
    monomials,
    multiply_linear,
    restrict_to_line,
)

X = Poly2.from_terms(1, {(1, 0): 1})
Y = Poly2.from_terms(1, {(0, 1): 1})

small = st.fractions(min_value=-9, max_value=9, max_denominator=7)
lines = st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)).filter(
    lambda t: t[0] or t[1]
).map(lambda t: canonical(*t))


@st.composite
def polys(draw, bound=None):
    n = draw(st.integers(0, 4)) if bound is None else bound
    coeffs = draw(st.lists(small, min_size=(n + 1) * (n + 2) // 2, max_size=(n + 1) * (n + 2) // 2))
    return Poly2(n, tuple(coeffs))


def test_monomial_order():
    assert monomials(2) == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def test_evaluate_examples():
    xy = Poly2.from_terms(2, {(1, 1): 1})
    assert evaluate(xy, Point(2, 3)) == 6
    assert evaluate(Poly2.zero(3), Point(7, -2)) == 0
    circle = Poly2.from_terms(2, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    assert evaluate(circle, Point("3/5", "4/5")) == 0


def test_multiply_linear_examples():
    assert multiply_linear(Poly2.constant(1), Line(0, 1, 0)) == Y
    assert multiply_linear(X, Line(1, 0, 0)) == Poly2.from_terms(2, {(2, 0): 1})
    got = multiply_linear(X + Y, canonical(1, -1, 0))
    assert got == Poly2.from_terms(2, {(2, 0): 1, (0, 2): -1})


def test_multiply_linear_overflow():
    with pytest.raises(DegreeOverflow):
        multiply_linear(Poly2.from_terms(2, {(2, 0): 1}), Line(1, 0, 0), bound=2)


def test_restrict_examples():
    xy = Poly2.from_terms(2, {(1, 1): 1})
    assert restrict_to_line(xy, Line(1, 0, 0)).is_zero()
    # y = 1: P0 = (0, 1), D = (1, 0), so xy becomes t
    r = restrict_to_line(xy, canonical(0, 1, -1))
    assert r.coeffs == (0, 1, 0)
    r = restrict_to_line(Poly2.from_terms(2, {(2, 0): 1, (0, 2): 1}), Line(0, 1, 0))
    assert r.coeffs == (0, 0, 1)


def test_divide_examples():
    xy = Poly2.from_terms(2, {(1, 1): 1})
    assert divide_by_line(xy, Line(1, 0, 0)) == Y
    assert divide_by_line(xy + Poly2.constant(1), Line(1, 0, 0)) is None
    l1 = canonical(1, -1, 0)
    l2 = canonical(1, 1, -1)
    p = Poly2.from_line(l1) * Poly2.from_line(l2)
    assert divide_by_line(p, l1) == Poly2.from_line(l2)


@settings(max_examples=200)
@given(polys(), lines)
def test_restriction_matches_substitution(p, line):
    # oracle: direct Fraction substitution at the standard parametrization
    r = restrict_to_line(p, line)
    base, (dx, dy) = point_on_line(line)
    for t in (Fraction(0), Fraction(1), Fraction(-5, 3), Fraction(7, 2)):
        assert r(t) == evaluate(p, Point(base.x + t * dx, base.y + t * dy))


@settings(max_examples=200)
@given(polys(), lines)
def test_divide_multiply_round_trip(q, line):
    p = multiply_linear(q, line)
    assert divide_by_line(p, line) == q


@settings(max_examples=100)
@given(polys(), lines, small, small)
def test_product_evaluates_as_product(q, line, x, y):
    pt = Point(x, y)
    assert evaluate(multiply_linear(q, line), pt) == evaluate(q, pt) * line.value(pt)


@settings(max_examples=200)
@given(polys(), lines)
def test_divisibility_iff_vanishing_on_line_points(p, line):
    pts = points_on_line(line, range(-1, p.bound))
    vanishes = all(evaluate(p, q) == 0 for q in pts)
    assert (divide_by_line(p, line) is not None) == vanishes


@settings(max_examples=100)
@given(polys(bound=3), lines, lines)
def test_vanishing_direction_of_equivalence(q, line, other):
    # a polynomial built to vanish on the line must restrict to zero
    p = multiply_linear(q, line)
    assert restrict_to_line(p, line).is_zero()
    if other != line and not q.is_zero():
        assert (divide_by_line(p, other) is not None) == (divide_by_line(q, other) is not None)


def test_poly_str():
    p = Poly2.from_terms(2, {(0, 0): 1, (1, 0): -1, (0, 2): Fraction(1, 2)})
    assert str(p) == "1 - x + 1/2*y^2"
    assert str(Poly2.zero(2)) == "0"
