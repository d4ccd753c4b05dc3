"""Named Lorentz matrices used throughout the examples and tests.

Angles are passed as rational points ``(cos, sin)`` on the unit circle and
hyperbolic parameters as ``(cosh, sinh)`` pairs; both default to the
symbolic generators of the coefficient field.
"""

from .linalg import Matrix, block_diag, metric_j
from .scalar import COS, COSH, SIN, SINH, ZERO, as_scalar, circle_point, hyperbolic_point

SYMBOLIC_THETA = (COSH, SINH)
SYMBOLIC_ANGLE = (COS, SIN)


def theta_at(t):
    """(cosh, sinh) as scalars at the rational hyperbola point t."""
    c, s = hyperbolic_point(t)
    return as_scalar(c), as_scalar(s)


def angle_at(u):
    """(cos, sin) as scalars at half-angle tangent u."""
    p, q = circle_point(u)
    return as_scalar(p), as_scalar(q)


def hyperbolic_rotation(theta=SYMBOLIC_THETA):
    c, s = theta
    return Matrix([[c, s], [s, c]])


def lambda_t(dim):
    return metric_j(dim)


def lambda_p(dim):
    """diag(I_{n-1,1}, 1): flips the last spatial coordinate."""
    diag = [1] * dim
    diag[dim - 2] = -1
    return Matrix.diag(diag)


def lambda_pt(dim):
    return lambda_p(dim) @ lambda_t(dim)


def rotation(angle, eps=1):
    p, q = angle
    return Matrix([[p, -q, 0], [q, p, 0], [0, 0, eps]])


def reflection(angle, eps=1):
    p, q = angle
    return Matrix([[p, q, 0], [q, -p, 0], [0, 0, eps]])


def boost(theta=SYMBOLIC_THETA):
    c, s = theta
    return Matrix([[1, 0, 0], [0, c, s], [0, s, c]])


def h_plus(left, theta, right, eps=1):
    """R_eps(left) B(theta) R(right); eps = 1 gives SO0(2,1), eps = -1 its Lambda^t coset."""
    return rotation(left, eps) @ boost(theta) @ rotation(right)


def h_minus(left, theta, right, eps=1):
    """Reflection form; eps = 1 gives the Lambda^p coset, eps = -1 the Lambda^pt coset.

    The boost factor is always the standard one; putting eps into its corner
    would leave the Lorentz group.
    """
    return reflection(left, eps) @ boost(theta) @ rotation(right)


def so2_embedded(angle=SYMBOLIC_ANGLE, dim=4):
    """Rotation of the (x1, x2) plane, identity on the remaining coordinates."""
    p, q = angle
    rows = [[ZERO] * dim for _ in range(dim)]
    rows[0][0], rows[0][1], rows[1][0], rows[1][1] = p, -q, q, p
    for i in range(2, dim):
        rows[i][i] = as_scalar(1)
    return Matrix(rows)


def delta_1(theta=SYMBOLIC_THETA):
    c, s = theta
    return block_diag(Matrix.identity(2), Matrix([[c, s], [-s, -c]]))


def delta_2(theta=SYMBOLIC_THETA):
    c, s = theta
    return block_diag(Matrix.identity(2), Matrix([[-c, -s], [s, c]]))
