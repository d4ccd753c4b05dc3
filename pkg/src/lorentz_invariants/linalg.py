"""Exact vectors and matrices over :class:`~lorentz_invariants.scalar.Scalar`.

Includes the Minkowski form <x, y> = x^t J y with J = diag(1, ..., 1, -1),
Lorentz-group membership and inversion, component classification and a small
exact eigen-solver for matrices of size at most four.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exceptions import DimensionError, NotLorentzError, UndecidedError
from .scalar import COSH, ONE, SINH, ZERO, Scalar, as_scalar, exact_sqrt


class Vector:
    """Immutable coordinate vector in R^{n+1}."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(as_scalar(x) for x in coords)

    @property
    def ambient_dim(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        _check_len(self, other)
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        _check_len(self, other)
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Vector(-a for a in self.coords)

    def scale(self, k):
        k = as_scalar(k)
        return Vector(k * a for a in self.coords)

    def is_zero(self):
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def __repr__(self):
        return "Vector([" + ", ".join(str(a) for a in self.coords) + "])"


def _check_len(x, y):
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")


class Matrix:
    """Immutable rectangular matrix of scalars."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise DimensionError("a matrix needs at least one row and one column")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise DimensionError("rows have different lengths")
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        return cls([[ZERO] * (cols or rows) for _ in range(rows)])

    @classmethod
    def diag(cls, values):
        values = [as_scalar(v) for v in values]
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns):
        columns = [list(c) for c in columns]
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return Vector(self.entries[i])

    def column(self, j):
        return Vector(r[j] for r in self.entries)

    def transpose(self):
        return Matrix(zip(*self.entries))

    @property
    def T(self):
        return self.transpose()

    def __add__(self, other):
        self._check_same(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same(other)
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.entries])

    def scale(self, k):
        k = as_scalar(k)
        return Matrix([[k * a for a in r] for r in self.entries])

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if self.cols != len(other):
                raise DimensionError(f"cannot apply {self.shape} matrix to vector of length {len(other)}")
            return Vector(_dot(r, other.coords) for r in self.entries)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.entries))
        return Matrix([[_dot(r, c) for c in cols] for r in self.entries])

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers: use lorentz_inverse")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)
        )

    __hash__ = None

    def is_rational(self):
        return all(a.is_rational() for r in self.entries for a in r)

    def map_entries(self, fn):
        return Matrix([[fn(a) for a in r] for r in self.entries])

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.entries)
        return f"Matrix([{body}])"


def _dot(xs, ys):
    acc = ZERO
    for a, b in zip(xs, ys):
        if a.is_zero() or b.is_zero():
            continue
        acc = acc + a * b
    return acc


def block_diag(*blocks):
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(out)


# -- Minkowski geometry -----------------------------------------------------------


def metric_j(dim):
    """J = diag(1, ..., 1, -1) of size ``dim``."""
    if dim < 2:
        raise DimensionError("Minkowski space needs dimension at least 2")
    return Matrix.diag([1] * (dim - 1) + [-1])


def minkowski_product(x, y):
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    x, y = list(x), list(y)
    return _dot(x[:-1], y[:-1]) - x[-1] * y[-1]


def apply_j(v):
    coords = list(v)
    return Vector(coords[:-1] + [-coords[-1]])


def is_lorentz(a):
    """True iff A^t J A = J exactly."""
    if not a.is_square():
        raise DimensionError("Lorentz test needs a square matrix")
    j = metric_j(a.rows)
    return a.T @ j @ a == j


def lorentz_inverse(a):
    """Inverse of a Lorentz matrix, J A^t J."""
    if not is_lorentz(a):
        raise NotLorentzError("matrix is not in O(n,1)")
    j = metric_j(a.rows)
    return j @ a.T @ j


class ComponentTag(enum.Enum):
    """Connected component of O(n,1), named after its coset representative."""

    SO0 = "SO0"
    LambdaP = "LambdaP"
    LambdaT = "LambdaT"
    LambdaPT = "LambdaPT"

    def __mul__(self, other):
        # the component group is the Klein four-group
        bits = {"SO0": (0, 0), "LambdaP": (1, 0), "LambdaT": (0, 1), "LambdaPT": (1, 1)}
        a, b = bits[self.value], bits[other.value]
        key = (a[0] ^ b[0], a[1] ^ b[1])
        return {v: ComponentTag(k) for k, v in bits.items()}[key]


def classify_component(a):
    """Component of a Lorentz matrix from the signs of det A and A[n, n]."""
    if not is_lorentz(a):
        raise NotLorentzError("matrix is not in O(n,1)")
    n = a.rows
    try:
        det_sign = determinant(a).sign()
        corner_sign = a[n - 1, n - 1].sign()
    except UndecidedError as exc:
        raise UndecidedError(f"component of a symbolic matrix is not decidable: {exc}") from None
    return {
        (1, 1): ComponentTag.SO0,
        (-1, 1): ComponentTag.LambdaP,
        (-1, -1): ComponentTag.LambdaT,
        (1, -1): ComponentTag.LambdaPT,
    }[(det_sign, corner_sign)]


# -- elimination --------------------------------------------------------------------


def rref(a):
    """Reduced row echelon form and pivot columns.

    The pivot in each column is the first nonzero entry at or below the
    current row, so results are deterministic.
    """
    m = [list(r) for r in a.entries]
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y if not y.is_zero() else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def kernel(a):
    """Basis of the null space, one vector per free column, in column order."""
    m, pivots = rref(a)
    cols = len(m[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][f]
        basis.append(Vector(v))
    return basis


def determinant(a):
    if not a.is_square():
        raise DimensionError("determinant needs a square matrix")
    m = [list(r) for r in a.entries]
    n = len(m)
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def inverse(a):
    """General inverse by Gauss-Jordan elimination."""
    n = a.rows
    if not a.is_square():
        raise DimensionError("inverse needs a square matrix")
    aug = Matrix([list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(a.entries)])
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix([r[n:] for r in m])


# -- characteristic polynomial and eigen-structure -----------------------------------


def characteristic_polynomial(a):
    """Coefficients [c_0, ..., c_n] of det(lambda I - A), low degree first."""
    n = a.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = a @ mk + ident.scale(coeffs[n - k + 1])
        amk = a @ mk
        trace = ZERO
        for i in range(n):
            trace = trace + amk[i, i]
        coeffs[n - k] = -trace / k
    return coeffs


def _poly_eval(coeffs, x):
    acc = ZERO
    for cf in reversed(coeffs):
        acc = acc * x + cf
    return acc


def _deflate(coeffs, root):
    """Divide by (lambda - root); coefficients low degree first."""
    n = len(coeffs) - 1
    out = [ZERO] * n
    carry = ZERO
    for k in range(n, 0, -1):
        carry = coeffs[k] + carry * root
        out[k - 1] = carry
    return out


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _rational_root_candidates(coeffs):
    values = [c.rational_value() for c in coeffs]
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in values]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if len(ints) <= 1:
        return [Fraction(0)]
    cands = {Fraction(0)}
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


@dataclass(frozen=True)
class Undecided:
    """Result marker: the real eigen-structure could not be completed exactly.

    ``partial`` holds whatever was decided before giving up.
    """

    reason: str
    polynomial: tuple = field(default=())
    partial: tuple = field(default=())

    def __bool__(self):
        return False


def eigen_lines(a):
    """Real eigenvalues with eigenspace bases, or :class:`Undecided`.

    Roots of the characteristic polynomial are searched among rational
    candidates (rational data) or among {+-1, +-(c+s), +-(c-s)} (symbolic
    data); a leftover quadratic is solved when its discriminant is an exact
    square in the field.
    """
    if not a.is_square():
        raise DimensionError("eigen-structure needs a square matrix")
    if a.rows > 4:
        raise DimensionError("eigen-structure is supported up to size 4")
    coeffs = characteristic_polynomial(a)
    rational = all(c.is_rational() for c in coeffs)
    if rational:
        candidates = [as_scalar(x) for x in _rational_root_candidates(coeffs)]
    else:
        candidates = [ONE, -ONE, COSH + SINH, COSH - SINH, -(COSH + SINH), -(COSH - SINH)]
    n = a.rows
    ident = Matrix.identity(n)

    def spaces(found):
        out = []
        for lam in found:
            space = kernel(a - ident.scale(lam))
            if space:
                out.append((lam, space))
        return out

    roots = []
    rest = list(coeffs)
    for cand in candidates:
        while len(rest) > 1 and _poly_eval(rest, cand).is_zero():
            if not any(cand == r for r in roots):
                roots.append(cand)
            rest = _deflate(rest, cand)
    degree = len(rest) - 1
    if degree == 1:
        r = -rest[0] / rest[1]
        if not any(r == x for x in roots):
            roots.append(r)
    elif degree == 2:
        a2, a1, a0 = rest[2], rest[1], rest[0]
        disc = a1 * a1 - 4 * a2 * a0
        root = exact_sqrt(disc)
        if root is not None:
            for r in ((-a1 + root) / (2 * a2), (-a1 - root) / (2 * a2)):
                if not any(r == x for x in roots):
                    roots.append(r)
        else:
            dv = disc.rational_value()
            if dv is None or dv >= 0:
                return Undecided("quadratic factor with non-square discriminant", tuple(rest), tuple(spaces(roots)))
            # negative discriminant: no further real eigenvalues
    elif degree > 2:
        return Undecided("characteristic polynomial not factored", tuple(rest), tuple(spaces(roots)))
    return spaces(roots)


def enumerate_words(generators, max_length):
    """All products of at most ``max_length`` generators (identity included)."""
    n = generators[0].rows
    words = [Matrix.identity(n)]
    frontier = [Matrix.identity(n)]
    for _ in range(max_length):
        nxt = []
        for w, g in product(frontier, generators):
            cand = w @ g
            if not any(cand == x for x in words):
                words.append(cand)
                nxt.append(cand)
        frontier = nxt
        if not frontier:
            break
    return words
