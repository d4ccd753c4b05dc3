import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorentz_invariants.catalog import delta_1, delta_2
from lorentz_invariants.exceptions import ParseError
from lorentz_invariants.invariants import reynolds_R
from lorentz_invariants.linalg import Matrix
from lorentz_invariants.polyring import (
    Poly,
    algebra_member_bounded,
    linear_reduce,
    parse_poly,
    partial_derivative,
    restrict_y_zero,
    same_span,
    substitute_linear,
    variable_names,
)
from lorentz_invariants.scalar import COSH, SINH

from conftest import rationals

NAMES8 = variable_names(8, doubled=True)


def p4(text):
    return parse_poly(text, 4)


def p8(text):
    return parse_poly(text, 8, NAMES8)


L = "((cosh(t)-1)*x4 + sinh(t)*x3)"


@st.composite
def polys(draw, nvars=3, max_terms=4):
    total = Poly.constant(nvars, draw(rationals))
    for _ in range(draw(st.integers(1, max_terms))):
        term = Poly.constant(nvars, draw(rationals))
        for _ in range(draw(st.integers(1, 3))):
            term = term * Poly.variable(nvars, draw(st.integers(0, nvars - 1)))
        total = total + term
    return total


@st.composite
def rational_matrices(draw, n=3):
    return Matrix([[draw(rationals) for _ in range(n)] for _ in range(n)])


def test_substitute_examples():
    x3 = p4("x3")
    assert substitute_linear(x3, delta_1()) == x3.scale(COSH) + p4("x4").scale(SINH)
    f = p4("x1^2 + x2*x4 - 3")
    assert substitute_linear(f, Matrix.identity(4)) == f
    q = p4("x3^2 - x4^2")
    assert substitute_linear(q, delta_2()) == q


def test_partial_derivative_examples():
    assert partial_derivative(p4("x1^2 + x2^2"), 0) == p4("2*x1")
    assert partial_derivative(p8("x1*y2 - x2*y1"), 5) == p8("x1")
    assert partial_derivative(p4("7"), 2).is_zero()


def test_restrict_examples():
    assert restrict_y_zero(p8("x1*y1 + y2^2")).is_zero()
    assert restrict_y_zero(p8("x1^2 + x1*y1")) == p4("x1^2")
    u12v12 = p8(f"{L}*((cosh(t)-1)*y4 + sinh(t)*y3)")
    assert restrict_y_zero(partial_derivative(u12v12, 6)) == p4(L).scale(SINH)


def test_linear_reduce_examples():
    x3 = p4("x3")
    assert linear_reduce([x3, x3.scale(2)]) == [x3]
    r02 = reynolds_R(p4("x3"), delta_1())
    r03 = reynolds_R(p4("x4"), delta_1())
    assert len(linear_reduce([r02, r03])) == 1
    assert linear_reduce([]) == []


def test_algebra_member_examples():
    gens = [p4("x1^2 + x2^2"), p4("x3^2 - x4^2"), p4(f"{L}^2")]
    assert algebra_member_bounded(p4("x3^2 - x4^2"), gens, 2)
    assert not algebra_member_bounded(p4("x1"), [p4("x1^2")], 4)
    assert algebra_member_bounded(p4("(x1^2 + x2^2)^2"), [p4("x1^2 + x2^2")], 4)


def test_parse_round_trip_and_errors():
    f = p4(f"{L}^2 - 1/2*x1*x2 + 3")
    assert parse_poly(f.to_text(), 4) == f
    with pytest.raises(ParseError):
        p4("x5")
    with pytest.raises(ParseError):
        p4("x1 +")


def test_arithmetic_identities():
    x, y = p4("x1"), p4("x2")
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y) ** 2 == x * x + x * y.scale(2) + y * y


@given(polys(), rational_matrices(), rational_matrices())
def test_substitution_composes(f, a, b):
    assert substitute_linear(substitute_linear(f, a), b) == substitute_linear(f, a @ b)


@given(polys(), st.integers(0, 2), st.integers(0, 2))
def test_partials_commute(f, i, j):
    assert partial_derivative(partial_derivative(f, i), j) == partial_derivative(partial_derivative(f, j), i)


@given(st.lists(polys(), max_size=5))
def test_linear_reduce_keeps_span(fs):
    reduced = linear_reduce(fs)
    assert len(reduced) <= len(fs)
    assert same_span(fs, reduced)


@given(polys(max_terms=2), st.lists(polys(max_terms=2), min_size=1, max_size=2), st.integers(1, 3))
def test_membership_monotone_in_degree(f, gens, d):
    if algebra_member_bounded(f, gens, d):
        assert algebra_member_bounded(f, gens, d + 1)


@given(polys(), polys())
def test_evaluation_respects_product(f, g):
    point = [1, -2, 3]
    assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
