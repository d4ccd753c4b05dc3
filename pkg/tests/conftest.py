"""Shared strategies and fixtures."""

import json
import pathlib
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lorentz_invariants.catalog import (
    angle_at,
    delta_1,
    delta_2,
    h_minus,
    h_plus,
    hyperbolic_rotation,
    lambda_p,
    lambda_pt,
    lambda_t,
    so2_embedded,
    theta_at,
)
from lorentz_invariants.linalg import Matrix, block_diag
from lorentz_invariants.scalar import COS, COSH, SIN, SINH, as_scalar

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DATA = pathlib.Path(__file__).parent / "data"
REPO_DATA = pathlib.Path(__file__).parent.parent / "data"


@pytest.fixture(scope="session")
def oracle():
    return json.loads((DATA / "oracle_values.json").read_text())


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)
hyper_t = st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4).filter(lambda t: t > 0)
half_tan = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def lorentz_2(draw):
    """Random element of O(1,1): products of boosts and the coset representatives."""
    pieces = draw(
        st.lists(
            st.one_of(
                hyper_t.map(lambda t: hyperbolic_rotation(theta_at(t))),
                st.sampled_from([lambda_p(2), lambda_t(2), lambda_pt(2)]),
            ),
            min_size=1,
            max_size=3,
        )
    )
    out = Matrix.identity(2)
    for m in pieces:
        out = out @ m
    return out


def _element_3(kind, u1, t, u2):
    left, right, theta = angle_at(u1), angle_at(u2), theta_at(t)
    if kind == "plus":
        return h_plus(left, theta, right)
    if kind == "plus_t":
        return h_plus(left, theta, right, -1)
    if kind == "minus":
        return h_minus(left, theta, right)
    return h_minus(left, theta, right, -1)


@st.composite
def lorentz_3(draw, max_size=2):
    """Random element of O(2,1) built from the rotation-boost-rotation forms."""
    out = Matrix.identity(3)
    for _ in range(draw(st.integers(1, max_size))):
        kind = draw(st.sampled_from(["plus", "plus_t", "minus", "minus_t"]))
        out = out @ _element_3(kind, draw(half_tan), draw(hyper_t), draw(half_tan))
    return out


def boost_34(t):
    """Boost of the (x3, x4) plane in R^4."""
    c, s = theta_at(t)
    return block_diag(Matrix.identity(2), Matrix([[c, s], [s, c]]))


@st.composite
def lorentz_4(draw):
    out = Matrix.identity(4)
    for _ in range(draw(st.integers(1, 3))):
        choice = draw(st.integers(0, 3))
        if choice == 0:
            m = so2_embedded(angle_at(draw(half_tan)))
        elif choice == 1:
            m = delta_1(theta_at(draw(hyper_t)))
        elif choice == 2:
            m = delta_2(theta_at(draw(hyper_t)))
        else:
            m = boost_34(draw(hyper_t))
        out = out @ m
    return out


@st.composite
def example_group_element(draw, t=None):
    """Element of the worked-example group at a fixed hyperbolic parameter."""
    theta = theta_at(t) if t is not None else None
    if theta is None:
        d1, d2 = delta_1(), delta_2()
    else:
        d1, d2 = delta_1(theta), delta_2(theta)
    gens = [so2_embedded(angle_at(draw(half_tan))), d1, d2]
    out = Matrix.identity(4)
    for i in draw(st.lists(st.integers(0, 2), min_size=1, max_size=4)):
        out = out @ gens[i]
    return out


_ATOMS = [COSH, SINH, COS, SIN]


@st.composite
def ring_elements(draw, symbols=(0, 1, 2, 3)):
    """Small polynomial in the chosen symbols with rational coefficients."""
    total = as_scalar(draw(rationals))
    for _ in range(draw(st.integers(0, 3))):
        term = as_scalar(draw(rationals))
        for _ in range(draw(st.integers(1, 2))):
            term = term * _ATOMS[draw(st.sampled_from(symbols))]
        total = total + term
    return total


@st.composite
def scalars(draw, symbols=(0, 1, 2, 3)):
    num = draw(ring_elements(symbols))
    den = draw(ring_elements(symbols).filter(lambda d: not d.is_zero()))
    return num / den


ACCEPTANCE_LINES = []


def record_acceptance(number, title, ok, detail=""):
    """Print one pass/fail line for an acceptance criterion and keep it for the summary."""
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
