import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lorentz_invariants.catalog import (
    delta_1,
    hyperbolic_rotation,
    lambda_p,
    lambda_pt,
    lambda_t,
    theta_at,
)
from lorentz_invariants.exceptions import DimensionError, NotLorentzError
from lorentz_invariants.linalg import (
    ComponentTag,
    Matrix,
    Undecided,
    Vector,
    characteristic_polynomial,
    classify_component,
    determinant,
    eigen_lines,
    inverse,
    is_lorentz,
    kernel,
    lorentz_inverse,
    metric_j,
    minkowski_product,
    rank,
)
from lorentz_invariants.scalar import COSH, SINH

from conftest import lorentz_2, lorentz_3, rationals

H = hyperbolic_rotation()


def same_line(v, w):
    return v[0] * w[1] == v[1] * w[0]


def test_minkowski_product_examples():
    assert minkowski_product(Vector([1, 0]), Vector([1, 0])) == 1
    assert minkowski_product(Vector([1, 1]), Vector([1, 1])) == 0
    assert minkowski_product(Vector([0, 0, 1]), Vector([0, 0, 1])) == -1
    with pytest.raises(DimensionError):
        minkowski_product(Vector([1, 0]), Vector([1, 0, 0]))


def test_is_lorentz_examples():
    assert is_lorentz(metric_j(3))
    assert is_lorentz(H)
    assert not is_lorentz(Matrix.diag([2, 1]))


def test_lorentz_inverse_examples():
    assert lorentz_inverse(H) == Matrix([[COSH, -SINH], [-SINH, COSH]])
    assert lorentz_inverse(lambda_t(2)) == lambda_t(2)
    assert lorentz_inverse(delta_1()) == delta_1()
    with pytest.raises(NotLorentzError):
        lorentz_inverse(Matrix.diag([2, 1]))


def test_classify_examples():
    assert classify_component(-Matrix.identity(2)) is ComponentTag.LambdaPT
    assert classify_component(metric_j(3)) is ComponentTag.LambdaT
    assert classify_component(Matrix.diag([1, -1, 1])) is ComponentTag.LambdaP
    assert classify_component(Matrix.identity(3)) is ComponentTag.SO0


def test_classify_symbolic_is_undecided():
    with pytest.raises(ArithmeticError):
        classify_component(H)


def test_kernel_examples():
    assert kernel(H - Matrix.identity(2)) == []
    assert kernel(lambda_t(2) - Matrix.identity(2)) == [Vector([1, 0])]
    assert kernel(Matrix.zeros(3)) == [Vector(row) for row in Matrix.identity(3).entries]


def test_determinant_and_inverse():
    assert determinant(H - Matrix.identity(2)) == 2 - 2 * COSH
    assert inverse(H) == lorentz_inverse(H)
    m = Matrix([[1, 2], [2, 4]])
    assert rank(m) == 1
    with pytest.raises(ZeroDivisionError):
        inverse(m)


def test_eigen_lines_boost():
    eig = eigen_lines(H)
    found = {str(lam): vecs for lam, vecs in eig}
    assert len(found) == 2
    for lam, vecs in eig:
        assert len(vecs) == 1
        v = vecs[0]
        assert H @ v == v.scale(lam)
    assert any(lam == COSH + SINH and same_line(vecs[0], [1, 1]) for lam, vecs in eig)
    assert any(lam == COSH - SINH and same_line(vecs[0], [1, -1]) for lam, vecs in eig)


def test_eigen_lines_time_flip():
    eig = dict((lam.rational_value(), vecs) for lam, vecs in eigen_lines(lambda_t(2)))
    assert eig == {1: [Vector([1, 0])], -1: [Vector([0, 1])]}


def test_eigen_lines_minus_time_flip_3d():
    m = Matrix.diag([-1, -1, 1])
    eig = dict((lam.rational_value(), vecs) for lam, vecs in eigen_lines(m))
    assert eig[1] == [Vector([0, 0, 1])]
    assert eig[-1] == [Vector([1, 0, 0]), Vector([0, 1, 0])]


def test_eigen_lines_irrational_is_undecided():
    # a rotation by a rational angle whose eigenvalues are not rational
    m = Matrix([[1, 1, 0], [1, 2, 0], [0, 0, 1]])
    out = eigen_lines(m)
    assert isinstance(out, Undecided)
    assert not out
    assert [lam.rational_value() for lam, _ in out.partial] == [1]


def test_eigen_lines_size_limit():
    with pytest.raises(DimensionError):
        eigen_lines(Matrix.identity(5))


def test_characteristic_polynomial_of_identity():
    coeffs = characteristic_polynomial(Matrix.identity(2))
    assert [x.rational_value() for x in coeffs] == [1, -2, 1]


@given(st.one_of(lorentz_2(), lorentz_3()), st.data())
def test_isometry(a, data):
    n = a.rows
    x = Vector(data.draw(st.lists(rationals, min_size=n, max_size=n)))
    y = Vector(data.draw(st.lists(rationals, min_size=n, max_size=n)))
    assert is_lorentz(a)
    assert minkowski_product(a @ x, a @ y) == minkowski_product(x, y)


@given(st.one_of(lorentz_2(), lorentz_3()))
def test_time_corner_at_least_one(a):
    n = a.rows
    assert abs(a[n - 1, n - 1].rational_value()) >= 1


@given(st.one_of(lorentz_2(), lorentz_3()))
def test_inverse_is_two_sided(a):
    ident = Matrix.identity(a.rows)
    assert lorentz_inverse(a) @ a == ident
    assert a @ lorentz_inverse(a) == ident


@given(st.one_of(lorentz_2(), lorentz_3()), st.one_of(lorentz_2(), lorentz_3()))
def test_component_multiplication(a, b):
    if a.rows != b.rows:
        return
    assert classify_component(a @ b) is classify_component(a) * classify_component(b)


@given(st.one_of(lorentz_2(), lorentz_3()))
def test_eigenpairs_verify(a):
    eig = eigen_lines(a)
    pairs = eig.partial if isinstance(eig, Undecided) else eig
    for lam, vecs in pairs:
        for v in vecs:
            assert not v.is_zero()
            assert a @ v == v.scale(lam)


@pytest.mark.parametrize("n", [2, 3])
def test_klein_table(n):
    reps = {
        ComponentTag.SO0: Matrix.identity(n),
        ComponentTag.LambdaP: lambda_p(n),
        ComponentTag.LambdaT: lambda_t(n),
        ComponentTag.LambdaPT: lambda_pt(n),
    }
    for tag, m in reps.items():
        assert classify_component(m) is tag
    for (ta, a), (tb, b) in itertools.product(reps.items(), repeat=2):
        assert classify_component(a @ b) is ta * tb


def test_boost_at_rational_point_is_so0():
    assert classify_component(hyperbolic_rotation(theta_at(Fraction(3)))) is ComponentTag.SO0
