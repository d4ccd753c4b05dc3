"""Invariant subspaces of Minkowski space.

Subspaces are stored by an echelon basis, so two subspaces are equal exactly
when their bases are.  Causal types follow the sign of the restricted form:
spacelike when it is positive definite, timelike when it takes a negative
value and lightlike otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import h_minus, h_plus
from .exceptions import DimensionError, NotInvariantError, UndecidedError, UnverifiableError
from .linalg import (
    Matrix,
    Undecided,
    Vector,
    apply_j,
    eigen_lines,
    enumerate_words,
    is_lorentz,
    kernel,
    lorentz_inverse,
    minkowski_product,
    rref,
)
from .scalar import ONE, ZERO, as_scalar

TRANSPOSE_WORD_LENGTH = 4


class CausalType(enum.Enum):
    Spacelike = "spacelike"
    Timelike = "timelike"
    Lightlike = "lightlike"

    def dual(self):
        """Type of the orthogonal complement in ambient dimension three or less."""
        return {
            CausalType.Spacelike: CausalType.Timelike,
            CausalType.Timelike: CausalType.Spacelike,
            CausalType.Lightlike: CausalType.Lightlike,
        }[self]


class Subspace:
    """Linear subspace of R^{n+1} with a unique echelon basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis=()):
        vectors = [v if isinstance(v, Vector) else Vector(v) for v in basis]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        self.ambient_dim = ambient_dim
        if vectors:
            rows, pivots = rref(Matrix([list(v) for v in vectors]))
            self.basis = tuple(Vector(rows[i]) for i in range(len(pivots)))
        else:
            self.basis = ()

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, Matrix.identity(ambient_dim).entries)

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def basis_matrix(self):
        """Basis vectors as the rows of a matrix."""
        return Matrix([list(v) for v in self.basis])

    def contains(self, v):
        v = v if isinstance(v, Vector) else Vector(v)
        if v.is_zero():
            return True
        return Subspace(self.ambient_dim, self.basis + (v,)).dim == self.dim

    def __contains__(self, v):
        return self.contains(v)

    def issubset(self, other):
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other):
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other):
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # a U + b V = 0 with the columns of U, V the two bases
        cols = list(self.basis) + [-v for v in other.basis]
        ker = kernel(Matrix.from_columns(cols))
        k = self.dim
        out = []
        for coeffs in ker:
            acc = Vector([ZERO] * self.ambient_dim)
            for a, b in zip(coeffs[:k], self.basis):
                acc = acc + b.scale(a)
            out.append(acc)
        return Subspace(self.ambient_dim, out)

    def apply(self, m):
        """Image under the matrix ``m``."""
        return Subspace(self.ambient_dim, [m @ v for v in self.basis])

    def is_invariant(self, m):
        return self.apply(m).issubset(self)

    def _check(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(str(x) for x in v) for v in self.basis)))

    def to_record(self):
        return {"ambient": self.ambient_dim, "basis": [[str(x) for x in v] for v in self.basis]}

    def __repr__(self):
        body = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace({self.ambient_dim}, [{body}])"


def span(*vectors):
    vectors = [v if isinstance(v, Vector) else Vector(v) for v in vectors]
    return Subspace(len(vectors[0]), vectors)


# -- causal type -----------------------------------------------------------


def vector_type(x):
    x = x if isinstance(x, Vector) else Vector(x)
    if x.is_zero():
        raise ValueError("the zero vector has no causal type")
    sign = minkowski_product(x, x).sign()
    if sign > 0:
        return CausalType.Spacelike
    if sign < 0:
        return CausalType.Timelike
    return CausalType.Lightlike


def gram_matrix(w):
    return [[minkowski_product(a, b) for b in w.basis] for a in w.basis]


def _rational_gram(w):
    out = []
    for row in gram_matrix(w):
        vals = [x.rational_value() for x in row]
        if any(v is None for v in vals):
            raise UndecidedError("causal type of a subspace with symbolic entries is not decidable")
        out.append(vals)
    return out


def signature(g):
    """(positive, negative, zero) counts of a rational symmetric matrix.

    Lagrange reduction: pivot on a nonzero diagonal entry, and when the
    diagonal vanishes replace e_i by e_i + e_j to create one.
    """
    g = [[Fraction(x) for x in row] for row in g]
    pos = neg = 0
    while g:
        n = len(g)
        i = next((k for k in range(n) if g[k][k]), None)
        if i is None:
            pair = next(((a, b) for a in range(n) for b in range(a + 1, n) if g[a][b]), None)
            if pair is None:
                return pos, neg, n
            a, b = pair
            # row and column operation e_a <- e_a + e_b
            for k in range(n):
                g[a][k] += g[b][k]
            for k in range(n):
                g[k][a] += g[k][b]
            i = a
        d = g[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != i]
        g = [[g[r][c] - g[r][i] * g[i][c] / d for c in rest] for r in rest]
    return pos, neg, 0


def _type_from_signature(pos, neg, zero):
    if neg:
        return CausalType.Timelike
    if zero:
        return CausalType.Lightlike
    return CausalType.Spacelike


def subspace_type(w):
    if not w.dim:
        raise ValueError("the zero subspace has no causal type")
    return _type_from_signature(*signature(_rational_gram(w)))


def line_types(e):
    """Causal types occurring among the lines of the subspace ``e``."""
    pos, neg, zero = signature(_rational_gram(e))
    types = set()
    if pos:
        types.add(CausalType.Spacelike)
    if neg:
        types.add(CausalType.Timelike)
    if zero or (pos and neg):
        types.add(CausalType.Lightlike)
    return frozenset(types)


# -- complements -----------------------------------------------------------


def orthogonal_complement(w):
    n = w.ambient_dim
    if not w.dim:
        return Subspace.full(n)
    return Subspace(n, kernel(Matrix([list(apply_j(b)) for b in w.basis])))


def is_nondegenerate(w):
    return orthogonal_complement(w).intersection(w).dim == 0


def is_transpose_closed(group, max_length=TRANSPOSE_WORD_LENGTH):
    """Bounded certificate that every generator's transpose lies in the group."""
    group = list(group)
    if not group:
        return True
    gens = group + [lorentz_inverse(g) for g in group]
    words = enumerate_words(gens, max_length)
    return all(any(g.T == w for w in words) for g in group)


def is_direct_sum(u, v):
    return u.intersection(v).dim == 0 and u.dim + v.dim == u.ambient_dim


def invariant_complement(w, group):
    """An invariant complement of the invariant subspace ``w``.

    Nondegenerate subspaces get their orthogonal complement.  A degenerate
    one gets J applied to its orthogonal complement, which requires the group
    to be closed under transposition.
    """
    group = list(group)
    for g in group:
        if not is_lorentz(g):
            raise NotInvariantError("group elements must be Lorentz matrices")
        if not w.is_invariant(g):
            raise NotInvariantError(f"{w} is not invariant under a group element")
    perp = orthogonal_complement(w)
    if is_nondegenerate(w):
        comp = perp
    else:
        if not is_transpose_closed(group):
            raise UnverifiableError(
                f"transpose closure of the group could not be certified with words of length {TRANSPOSE_WORD_LENGTH}"
            )
        comp = Subspace(w.ambient_dim, [apply_j(v) for v in perp.basis])
    if not is_direct_sum(w, comp) or not all(comp.is_invariant(g) for g in group):
        raise NotInvariantError("complement verification failed")
    return comp


# -- fixed points, lines and planes ----------------------------------------


def fix_subspace(gens):
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator is needed")
    n = gens[0].rows
    if any(g.shape != (n, n) for g in gens):
        raise DimensionError("generators must be square of a common size")
    ident = Matrix.identity(n)
    rows = [row for g in gens for row in (g - ident).entries]
    return Subspace(n, kernel(Matrix(rows)))


@dataclass(frozen=True)
class LineFamily:
    """One invariant line, or every line inside ``subspace`` when ``is_family``.

    ``types`` lists the causal types that occur, or is None when they cannot
    be decided.
    """

    subspace: Subspace
    is_family: bool
    types: frozenset | None
    eigenvalue: object = field(default=None, compare=False)

    def to_record(self):
        return {
            "kind": "family" if self.is_family else "line",
            "subspace": self.subspace.to_record(),
            "types": None if self.types is None else sorted(t.value for t in self.types),
            "eigenvalue": None if self.eigenvalue is None else str(self.eigenvalue),
        }


@dataclass(frozen=True)
class PlaneFamily:
    """One invariant plane, or every plane containing ``subspace`` when ``is_family``."""

    subspace: Subspace
    is_family: bool
    types: frozenset | None

    def to_record(self):
        return {
            "kind": "family" if self.is_family else "plane",
            "subspace": self.subspace.to_record(),
            "types": None if self.types is None else sorted(t.value for t in self.types),
        }


def _safe(fn, *args):
    try:
        return fn(*args)
    except UndecidedError:
        return None


def invariant_lines(gamma):
    if gamma.rows > 3:
        raise DimensionError("invariant lines are enumerated up to ambient dimension three")
    if not is_lorentz(gamma):
        raise NotInvariantError("invariant line enumeration needs a Lorentz matrix")
    eig = eigen_lines(gamma)
    if isinstance(eig, Undecided):
        return Undecided(eig.reason, eig.polynomial, tuple(_line_families(gamma, eig.partial)))
    return _line_families(gamma, eig)


def _line_families(gamma, eig):
    out = []
    for lam, basis in eig:
        e = Subspace(gamma.rows, basis)
        if e.dim == 1:
            t = _safe(vector_type, e.basis[0])
            out.append(LineFamily(e, False, None if t is None else frozenset([t]), lam))
        else:
            out.append(LineFamily(e, True, _safe(line_types, e), lam))
    return out


def invariant_planes(gamma):
    """Invariant planes of a 3x3 Lorentz matrix, as complements of invariant lines."""
    if gamma.rows != 3:
        raise DimensionError("invariant planes are enumerated in ambient dimension three")
    lines = invariant_lines(gamma)
    if isinstance(lines, Undecided):
        return Undecided(lines.reason, lines.polynomial, tuple(_dual_planes(lines.partial)))
    return _dual_planes(lines)


def _dual_planes(lines):
    out = []
    for fam in lines:
        # lines inside E correspond to planes containing E-perp
        perp = orthogonal_complement(fam.subspace)
        dual = None if fam.types is None else frozenset(t.dual() for t in fam.types)
        out.append(PlaneFamily(perp, fam.is_family, dual))
    return out


# -- conjugacy and catalog fixed lines -------------------------------------


def _rational(x, what):
    v = as_scalar(x).rational_value()
    if v is None:
        raise ValueError(f"{what} must be rational")
    return v


def conjugacy_matrix_3d(angle, r, side="left"):
    """Lorentz matrix conjugating the special elements to their normal forms.

    ``angle`` is a rational point (cos, sin) of the right-hand rotation and
    ``r`` fixes the half boost: cosh(theta/2) = (r + 1/r)/2, so the boost
    itself is the one at t = r^2.  With ``side="left"`` the result M satisfies
    M X M^-1 = normal form; ``side="right"`` returns the inverse matrix P with
    P^-1 X P = normal form, whose first column is (-cos, sin, 0).
    """
    p, q = (_rational(x, "angle") for x in angle)
    if p * p + q * q != 1:
        raise ValueError(f"({p}, {q}) is not on the unit circle")
    r = _rational(r, "r")
    if r <= 0:
        raise ValueError("r must be positive")
    ch = (r + 1 / r) / 2
    sh = (r - 1 / r) / 2
    right = Matrix(
        [
            [-p, -q * ch, -q * sh],
            [q, -p * ch, -p * sh],
            [0, sh, ch],
        ]
    )
    if side == "right":
        return right
    if side != "left":
        raise ValueError("side must be 'left' or 'right'")
    return lorentz_inverse(right)


@dataclass(frozen=True)
class CatalogFix:
    """Fixed line of a catalog element: closed form checked against the kernel."""

    vector: Vector | None
    formula: Vector
    agrees: bool
    warnings: tuple = ()


FIX_KINDS = ("Hplus", "LambdaPtHplus")


def catalog_fix_formula(kind, left, theta, right):
    """Closed-form fixed vector of the rotation-boost-rotation element.

    ``Hplus`` is R(left) B(theta) R(right); ``LambdaPtHplus`` is the
    reflection form with the time flip, reflection(left, -1) B(theta) R(right).
    """
    P, Q = (as_scalar(x) for x in left)
    p, q = (as_scalar(x) for x in right)
    c, s = (as_scalar(x) for x in theta)
    cos_sum = p + P
    if cos_sum.is_zero():
        raise ValueError("degenerate parameters: the two cosines cancel")
    if (c - 1).is_zero():
        raise ValueError("degenerate parameters: cosh(theta) = 1")
    sin_sum = P * q + Q * p
    if kind == "Hplus":
        return Vector([ONE, (Q - q) / cos_sum, sin_sum * s / ((1 - c) * cos_sum)])
    if kind == "LambdaPtHplus":
        return Vector([ONE, (Q - q) / cos_sum, -(sin_sum * s) / ((c + 1) * cos_sum)])
    raise ValueError(f"kind must be one of {FIX_KINDS}")


def catalog_element(kind, left, theta, right):
    if kind == "Hplus":
        return h_plus(left, theta, right)
    if kind == "LambdaPtHplus":
        return h_minus(left, theta, right, -1)
    raise ValueError(f"kind must be one of {FIX_KINDS}")


def fix_line_catalog(kind, left, theta, right):
    """Fixed line from the closed form, verified against the kernel of X - I."""
    formula = catalog_fix_formula(kind, left, theta, right)
    fixed = fix_subspace([catalog_element(kind, left, theta, right)])
    if fixed.dim == 1 and fixed.contains(formula):
        return CatalogFix(formula, formula, True)
    if fixed.dim == 1:
        vec = fixed.basis[0]
        msg = f"closed form {list(map(str, formula))} is not fixed; kernel gives {list(map(str, vec))}"
    else:
        vec = None
        msg = f"fixed subspace has dimension {fixed.dim}, not a line"
    return CatalogFix(vec, formula, False, (msg,))
