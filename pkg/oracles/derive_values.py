"""Independent oracle for the derived values used in the test suite.

Works with sympy rational functions: cosh = (z + 1/z)/2, sinh = (z - 1/z)/2,
cos = (1 - w^2)/(1 + w^2), sin = 2w/(1 + w^2), so every identity reduces to
``cancel(expr) == 0``.  Results are written to tests/data/oracle_values.json
and the tests compare the library against that file.

Run from the repository root:  python oracles/derive_values.py
"""

import json
import pathlib

import sympy as sp

z, w = sp.symbols("z w", positive=True)
C = (z + 1 / z) / 2
S = (z - 1 / z) / 2
x1, x2, x3, x4, y1, y2, y3, y4 = sp.symbols("x1:5 y1:5")
X = sp.Matrix([x1, x2, x3, x4])
Y = sp.Matrix([y1, y2, y3, y4])
J4 = sp.diag(1, 1, 1, -1)
HALF = sp.Rational(1, 2)


def zero(expr):
    return sp.cancel(sp.together(sp.expand(expr))) == 0


def mat_zero(m):
    return all(zero(e) for e in m)


def frac(v):
    v = sp.nsimplify(v)
    return str(sp.Rational(v))


def subst(f, m, vars_):
    new = m * sp.Matrix(vars_)
    return sp.expand(f.subs(dict(zip(vars_, new)), simultaneous=True))


out = {}

# scalar identities
out["scalar"] = {
    "inverse_c_plus_s_is_c_minus_s": zero(1 / (C + S) - (C - S)),
    "half_sum_is_c": zero(HALF * (C + 1) + HALF * (C - 1) - C),
    "inverse_c_minus_s_is_c_plus_s": zero(1 / (C - S) - (C + S)),
    "c_at_2": frac(C.subs(z, 2)),
    "s_at_2": frac(S.subs(z, 2)),
}

# lorentz inverse of H and det(H - I)
H = sp.Matrix([[C, S], [S, C]])
J2 = sp.diag(1, -1)
Hinv = J2 * H.T * J2
out["linalg"] = {
    "h_inverse_is_h_minus_theta": mat_zero(Hinv - sp.Matrix([[C, -S], [-S, C]])),
    "h_times_inverse_is_identity": mat_zero(H * Hinv - sp.eye(2)),
    "det_h_minus_identity_is_2_minus_2c": zero((H - sp.eye(2)).det() - (2 - 2 * C)),
}

# example group in R^4
d1 = sp.diag(sp.eye(2), sp.Matrix([[C, S], [-S, -C]]))
d2 = sp.diag(sp.eye(2), sp.Matrix([[-C, -S], [S, C]]))
xv = [x1, x2, x3, x4]


def R(f, d):
    return sp.expand(HALF * (f + subst(f, d, xv)))


def Sop(f, d):
    return sp.expand(HALF * (f - subst(f, d, xv)))


u01, u02, u03 = x1**2 + x2**2, x3, x4
reyn = {
    "R(u01)": (R(u01, d1), x1**2 + x2**2),
    "R(u02)": (R(u02, d1), HALF * ((C + 1) * x3 + S * x4)),
    "R(u03)": (R(u03, d1), -HALF * ((C - 1) * x4 + S * x3)),
    "S(u01)": (Sop(u01, d1), 0),
    "S(u02)": (Sop(u02, d1), -HALF * ((C - 1) * x3 + S * x4)),
    "S(u03)": (Sop(u03, d1), HALF * ((C + 1) * x4 + S * x3)),
}
out["reynolds_k1_match_reference"] = {k: zero(a - b) for k, (a, b) in reyn.items()}

# the coefficient identity relating x3^2 - x4^2 to R(u03), S(u02)
r03, s02 = reyn["R(u03)"][0], reyn["S(u02)"][0]
q = x3**2 - x4**2
ratio = sp.cancel(sp.together(q / sp.expand(r03**2 - s02**2)))
out["identity"] = {
    "reference_form_holds": zero(HALF * (C - 1) * (r03**2 - 2 * s02**2) - q),
    "ratio_free_of_x": not ratio.has(x1, x2, x3, x4),
    "ratio_is_2_over_c_minus_1": zero(ratio - 2 / (C - 1)),
}

# substitution and derivative facts
L = (C - 1) * x4 + S * x3
Ly = (C - 1) * y4 + S * y3
out["polyring"] = {
    "delta2_fixes_x3sq_minus_x4sq": zero(subst(q, d2, xv) - q),
    "delta1_on_x3": zero(subst(x3, d1, xv) - (C * x3 + S * x4)),
    "dy3_of_L_Ly_at_y0_is_s_L": zero(sp.diff(L * Ly, y3).subs({y1: 0, y2: 0, y3: 0, y4: 0}) - S * L),
    "delta1_delta2_is_minus_identity_on_x3x4": mat_zero((d1 * d2)[2:, 2:] + sp.eye(2)),
}


def equivariant_from(f):
    grad = sp.Matrix([sp.diff(f, v) for v in (y1, y2, y3, y4)])
    return (J4 * grad).subs({y1: 0, y2: 0, y3: 0, y4: 0})


def equivariant(g, m):
    lhs = g.subs(dict(zip(xv, m * X)), simultaneous=True)
    return mat_zero(lhs - m * g)


g3 = equivariant_from(sp.expand(L * Ly))
out["equivariants"] = {
    "u12v12_map_is_s_one_minus_c_times_L": mat_zero(g3 - sp.Matrix([0, 0, S, 1 - C]) * L),
    "reference_s_c_minus_1_is_equivariant": all(
        equivariant(sp.Matrix([0, 0, S, C - 1]) * L, d) for d in (d1, d2)
    ),
    "derived_map_is_equivariant": all(equivariant(g3, d) for d in (d1, d2)),
}
# the map from S(x3) S(y3) under delta_1, absent from the reference list;
# B spans the delta_1-odd direction (L is the even one)
B = sp.expand((C - 1) * x3 + S * x4)
By = sp.expand((C - 1) * y3 + S * y4)
g4 = equivariant_from(sp.expand(B * By))
block_identity = sp.Matrix([0, 0, x3, x4])
out["equivariants"]["extra_map_equivariant"] = all(equivariant(g4, d) for d in (d1, d2))
out["equivariants"]["extra_map_is_c_minus_1_minus_s_times_B"] = mat_zero(g4 - sp.Matrix([0, 0, C - 1, -S]) * B)
# all three maps are linear and the ring has no degree-one invariants, so a
# linear map outside the constant span of g3 is outside the reference module
out["equivariants"]["extra_map_not_constant_multiple_of_g3"] = sp.cancel(g4[2] / g3[2]).has(x3, x4)
out["equivariants"]["block_identity_equivariant"] = all(equivariant(block_identity, d) for d in (d1, d2))
out["equivariants"]["block_identity_not_constant_multiple_of_g3"] = sp.cancel(x3 / g3[2]).has(x3, x4)
out["equivariants"]["L_proportional_to_R_u02_direction"] = zero(
    sp.expand((C + 1) * x3 + S * x4) * S - (C + 1) * sp.expand(L)
)

# Lambda^t invariants in two variables: dimension per degree of the invariant space
a, b = sp.symbols("a b")
dims = []
for d in range(5):
    monos = [a**i * b ** (d - i) for i in range(d + 1)]
    images = [sp.expand(HALF * (m + m.subs(b, -b))) for m in monos]
    coeffs = sp.Matrix([[sp.Poly(img, a, b).coeff_monomial(mm) for mm in monos] for img in images])
    dims.append(int(coeffs.rank()))
out["lambda_t_invariant_dims_by_degree"] = dims

# 3x3 catalog: conjugacy matrix and fixed lines at rational instances


def rot(p, q, eps=1):
    return sp.Matrix([[p, -q, 0], [q, p, 0], [0, 0, eps]])


def refl(p, q, eps=1):
    return sp.Matrix([[p, q, 0], [q, -p, 0], [0, 0, eps]])


def boost(c, s):
    return sp.Matrix([[1, 0, 0], [0, c, s], [0, s, c]])


def hyper(t):
    t = sp.Rational(t)
    return (t + 1 / t) / 2, (t - 1 / t) / 2


def circle(u):
    u = sp.Rational(u)
    return (1 - u**2) / (1 + u**2), 2 * u / (1 + u**2)


J3 = sp.diag(1, 1, -1)
Lt = J3
Lp = sp.diag(1, -1, 1)
p, qq = sp.Rational(3, 5), sp.Rational(4, 5)
r = sp.Rational(2)
ch, sh = (r + 1 / r) / 2, (r - 1 / r) / 2
c, s = hyper(r**2)
Mp = sp.Matrix([[-p, -qq * ch, -qq * sh], [qq, -p * ch, -p * sh], [0, sh, ch]])
Hpi = rot(-p, qq) * boost(c, s) * rot(p, qq)
LtH = rot(p, -qq, -1) * boost(c, s) * rot(p, qq)
LpHm = refl(p, -qq, 1) * boost(c, s) * rot(p, qq)
Hm = refl(-p, qq, -1) * boost(c, s) * rot(p, qq)
Mi = Mp.inv()
out["conjugacy"] = {
    "matrix_entries_at_3_5_4_5_r2": [[str(e) for e in row] for row in Mp.tolist()],
    "matrix_is_lorentz": (Mp.T * J3 * Mp - J3).is_zero_matrix,
    "M_H_Minv_is_minus_lambda_t": (Mp * Hpi * Mi + Lt).is_zero_matrix,
    "Minv_H_M_is_minus_lambda_t": (Mi * Hpi * Mp + Lt).is_zero_matrix,
    "M_LtH_Minv_is_lambda_t": (Mp * LtH * Mi - Lt).is_zero_matrix,
    "Minv_LtH_M_is_lambda_t": (Mi * LtH * Mp - Lt).is_zero_matrix,
    "Minv_LpHminus_M_is_lambda_p": (Mi * LpHm * Mp - Lp).is_zero_matrix,
    "Minv_Hminus_M_is_minus_lambda_p": (Mi * Hm * Mp + Lp).is_zero_matrix,
    "left_matrix_inverse_entries": [[str(e) for e in row] for row in Mi.tolist()],
}

instances = [(2, 3, 2), ("1/3", 5, 3), (7, "2/5", "1/2"), (-3, "1/7", 5)]
fix = []
for u_left, u_right, t in instances:
    P, Q = circle(u_left)
    pp, q2 = circle(u_right)
    c, s = hyper(t)
    cos_sum = pp + P
    sin_sum = P * q2 + Q * pp
    entry = {"u_left": str(u_left), "u_right": str(u_right), "t": str(t)}
    for name, m, third_a, third_b in [
        (
            "Hplus",
            rot(P, Q) * boost(c, s) * rot(pp, q2),
            sin_sum * s / ((1 - c) * cos_sum),
            (P * q2 + Q * pp * s) / ((1 - c) * cos_sum),
        ),
        (
            "LambdaPtHplus",
            refl(P, Q, -1) * boost(c, s) * rot(pp, q2),
            -sin_sum * s / ((c + 1) * cos_sum),
            -(P * q2 + Q * pp * s) / ((c + 1) * cos_sum),
        ),
        ("LambdaPt_times_Hplus_literal", sp.diag(1, -1, -1) * rot(P, Q) * boost(c, s) * rot(pp, q2), None, None),
    ]:
        ns = (m - sp.eye(3)).nullspace()
        rec = {"kernel_dim": len(ns)}
        if len(ns) == 1:
            v = ns[0] / ns[0][0]
            rec["kernel_vector"] = [str(e) for e in v]
            second = (Q - q2) / cos_sum
            if name == "LambdaPt_times_Hplus_literal":
                second = -(q2 - Q) / cos_sum
                third_a = -sin_sum * s / ((c + 1) * cos_sum)
                third_b = -(P * q2 + Q * pp * s) / ((c + 1) * cos_sum)
            rec["second_matches"] = bool(v[1] == second)
            rec["grouping_sin_sum_times_sinh"] = bool(v[2] == third_a)
            rec["grouping_sinh_on_second_term"] = bool(v[2] == third_b)
        entry[name] = rec
    fix.append(entry)
out["fix_lines"] = fix

# Lambda^t H+ away from the conjugate case still has a real eigenvalue -1
P, Q = circle(2)
pp, q2 = circle(3)
c, s = hyper(3)
m = rot(P, Q, -1) * boost(c, s) * rot(pp, q2)
ev = m.eigenvects()
real_rational = [(str(val), [str(e) for e in (vecs[0] / vecs[0][0])]) for val, mult, vecs in ev if val.is_rational]
out["lambda_t_hplus_generic"] = {
    "u_left": "2",
    "u_right": "3",
    "t": "3",
    "rational_eigen": real_rational,
    "charpoly": str(sp.factor(m.charpoly().as_expr())),
}

# conjugate subgroups: counterexample to the literal gamma W form
g = sp.Matrix([[c, s], [s, c]])  # boost at t = 3
sigma = sp.diag(1, -1)  # Lambda^t, invariant line W = x-axis
sigma2 = g.inv() * sigma * g
W = sp.Matrix([1, 0])
gw = g * W
giw = g.inv() * W


def line_invariant(m, v):
    img = m * v
    return sp.Matrix.hstack(img, v).rank() == 1


out["conjugate_subgroups"] = {
    "W_invariant_under_sigma": line_invariant(sigma, W),
    "gammaW_invariant_under_gamma_inv_sigma_gamma": line_invariant(sigma2, gw),
    "gamma_inv_W_invariant_under_gamma_inv_sigma_gamma": line_invariant(sigma2, giw),
}

target = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "oracle_values.json"
target.parent.mkdir(parents=True, exist_ok=True)
target.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
print(f"wrote {target}")
