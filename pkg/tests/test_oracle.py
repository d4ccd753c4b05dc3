"""Library results against values frozen from the independent sympy derivation."""

from fractions import Fraction

import pytest

from lorentz_invariants.catalog import angle_at, delta_1, delta_2, h_plus, hyperbolic_rotation, lambda_t, theta_at
from lorentz_invariants.equivariants import PolyMap, equivariant_from_invariant, is_equivariant
from lorentz_invariants.invariants import GroupSpec, algorithm_generators, is_invariant, reynolds_R, reynolds_S
from lorentz_invariants.linalg import Matrix, determinant, eigen_lines, lorentz_inverse
from lorentz_invariants.polyring import Poly, bounded_products, linear_reduce, partial_derivative, restrict_y_zero
from lorentz_invariants.scalar import COSH, SINH, eval_hyperbolic, parse_scalar

from worked_example import L, LY, p4, p8

HALF = Fraction(1, 2)
d1 = delta_1()


def test_scalar_values(oracle):
    frozen = oracle["scalar"]
    assert str(eval_hyperbolic(COSH, 2)) == frozen["c_at_2"]
    assert str(eval_hyperbolic(SINH, 2)) == frozen["s_at_2"]
    assert ((COSH + SINH) * HALF + (COSH - SINH) * HALF == COSH) is frozen["half_sum_is_c"]
    assert (1 / (COSH - SINH) == COSH + SINH) is frozen["inverse_c_minus_s_is_c_plus_s"]
    assert (1 / (COSH + SINH) == COSH - SINH) is frozen["inverse_c_plus_s_is_c_minus_s"]


def test_linalg_values(oracle):
    frozen = oracle["linalg"]
    h = hyperbolic_rotation()
    ident = Matrix.identity(2)
    assert (h @ lorentz_inverse(h) == ident) is frozen["h_times_inverse_is_identity"]
    assert (lorentz_inverse(h) == Matrix([[COSH, -SINH], [-SINH, COSH]])) is frozen["h_inverse_is_h_minus_theta"]
    assert (determinant(h - ident) == 2 - 2 * COSH) is frozen["det_h_minus_identity_is_2_minus_2c"]


def test_polyring_values(oracle):
    frozen = oracle["polyring"]
    block = (d1 @ delta_2()).entries
    assert (Matrix([row[2:] for row in block[2:]]) == Matrix.diag([-1, -1])) is frozen["delta1_delta2_is_minus_identity_on_x3x4"]
    assert is_invariant(p4("x3^2 - x4^2"), delta_2()) is frozen["delta2_fixes_x3sq_minus_x4sq"]
    u12v12 = p8(f"{L}*{LY}")
    assert (restrict_y_zero(partial_derivative(u12v12, 6)) == p4(L).scale(SINH)) is frozen["dy3_of_L_Ly_at_y0_is_s_L"]


REFERENCE_REYNOLDS = {
    "R(u01)": (reynolds_R, "x1^2 + x2^2", "x1^2 + x2^2"),
    "R(u02)": (reynolds_R, "x3", "1/2*((cosh(t)+1)*x3 + sinh(t)*x4)"),
    "R(u03)": (reynolds_R, "x4", "-1/2*((cosh(t)-1)*x4 + sinh(t)*x3)"),
    "S(u01)": (reynolds_S, "x1^2 + x2^2", "0"),
    "S(u02)": (reynolds_S, "x3", "-1/2*((cosh(t)-1)*x3 + sinh(t)*x4)"),
    "S(u03)": (reynolds_S, "x4", "1/2*((cosh(t)+1)*x4 + sinh(t)*x3)"),
}


@pytest.mark.parametrize("key", sorted(REFERENCE_REYNOLDS))
def test_first_step_reynolds_values(key, oracle):
    op, arg, reference = REFERENCE_REYNOLDS[key]
    assert (op(p4(arg), d1) == p4(reference)) is oracle["reynolds_k1_match_reference"][key]


def test_coefficient_identity(oracle):
    frozen = oracle["identity"]
    r03 = reynolds_R(p4("x4"), d1)
    s02 = reynolds_S(p4("x3"), d1)
    target = p4("x3^2 - x4^2")
    derived = (r03 * r03 - s02 * s02).scale(2 / (COSH - 1))
    reference = (r03 * r03 - (s02 * s02).scale(2)).scale(HALF * (COSH - 1))
    assert (derived == target) is frozen["ratio_is_2_over_c_minus_1"] is True
    assert (reference == target) is frozen["reference_form_holds"] is False


def test_equivariant_facts(oracle):
    frozen = oracle["equivariants"]
    derived = PolyMap([p4("0"), p4("0"), p4(f"sinh(t)*{L}"), p4(f"(1-cosh(t))*{L}")])
    reference = PolyMap([p4("0"), p4("0"), p4(f"sinh(t)*{L}"), p4(f"(cosh(t)-1)*{L}")])
    assert (equivariant_from_invariant(p8(f"{L}*{LY}")) == derived) is frozen["u12v12_map_is_s_one_minus_c_times_L"]
    assert is_equivariant(derived, d1) is frozen["derived_map_is_equivariant"]
    assert is_equivariant(reference, d1) is frozen["reference_s_c_minus_1_is_equivariant"]
    b = "((cosh(t)-1)*x3 + sinh(t)*x4)"
    by = "((cosh(t)-1)*y3 + sinh(t)*y4)"
    extra = equivariant_from_invariant(p8(f"{b}*{by}"))
    expected = PolyMap([p4("0"), p4("0"), p4(f"(cosh(t)-1)*{b}"), p4(f"-sinh(t)*{b}")])
    assert (extra == expected) is frozen["extra_map_is_c_minus_1_minus_s_times_B"]
    assert all(is_equivariant(extra, d) for d in (d1, delta_2())) is frozen["extra_map_equivariant"]
    block = PolyMap([p4("0"), p4("0"), p4("x3"), p4("x4")])
    assert all(is_equivariant(block, d) for d in (d1, delta_2())) is frozen["block_identity_equivariant"]


def test_time_flip_invariant_dimensions(oracle):
    x = [Poly.variable(2, 0), Poly.variable(2, 1)]
    gens = algorithm_generators(GroupSpec(2, sigma_invariant_gens=tuple(x), involutions=(lambda_t(2),)))
    products, _ = bounded_products(gens, 4)
    dims = []
    for d in range(5):
        layer = [p for p in products.values() if p.degree() == d and all(sum(e) == d for e, _ in p.items())]
        dims.append(len(linear_reduce(layer)) if d else 1)
    assert dims == oracle["lambda_t_invariant_dims_by_degree"]


def test_generic_time_flip_eigenline(oracle):
    frozen = oracle["lambda_t_hplus_generic"]
    left, right = angle_at(Fraction(frozen["u_left"])), angle_at(Fraction(frozen["u_right"]))
    m = h_plus(left, theta_at(Fraction(frozen["t"])), right, -1)
    eig = eigen_lines(m)
    rational = [[str(lam), [str(x / vecs[0][0]) for x in vecs[0]]] for lam, vecs in eig]
    assert rational == frozen["rational_eigen"]


def test_parse_of_reference_values_is_exact():
    assert parse_scalar("-1/2*(cosh(t)-1)") == -HALF * COSH + HALF
