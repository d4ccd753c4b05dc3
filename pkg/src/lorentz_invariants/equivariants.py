"""Equivariant polynomial maps and their correspondence with invariants.

An equivariant ``g`` corresponds to the function f(x, y) = <g(x), y> on the
doubled space, which is invariant under the diagonal action; conversely
g(x) = J (d_y f)^t at (x, 0).  Applied to generators of the doubled
invariant ring this yields generators of the module of equivariants.
"""

from __future__ import annotations

from .exceptions import DimensionError, NotInvariantError
from .invariants import is_diagonal_lorentz  # noqa: F401  re-exported
from .linalg import Vector, block_diag
from .polyring import (
    Echelon,
    Poly,
    bounded_products,
    extend_variables,
    partial_derivative,
    restrict_y_zero,
    substitute_linear,
)


class PolyMap:
    """Polynomial map R^{n+1} -> R^{n+1}, one component per coordinate."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise DimensionError("a map needs at least one component")
        nvars = components[0].nvars
        if any(c.nvars != nvars for c in components):
            raise DimensionError("components live in different rings")
        self.components = components

    @classmethod
    def identity(cls, dim):
        return cls(Poly.variable(dim, i) for i in range(dim))

    @classmethod
    def zero(cls, dim):
        return cls(Poly.constant(dim, 0) for _ in range(dim))

    @property
    def nvars(self):
        return self.components[0].nvars

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def degree(self):
        return max(c.degree() for c in self.components)

    def __add__(self, other):
        return PolyMap(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        return PolyMap(a - b for a, b in zip(self.components, other.components))

    def __neg__(self):
        return PolyMap(-a for a in self.components)

    def scale(self, k):
        """Multiply every component by a scalar or a polynomial."""
        if isinstance(k, Poly):
            return PolyMap(k * a for a in self.components)
        return PolyMap(a.scale(k) for a in self.components)

    def compose(self, m):
        """x -> g(Mx)."""
        return PolyMap(substitute_linear(c, m) for c in self.components)

    def apply_matrix(self, m):
        """x -> M g(x)."""
        if m.cols != len(self):
            raise DimensionError("matrix does not match the map's target dimension")
        out = []
        for i in range(m.rows):
            acc = Poly.constant(self.nvars, 0)
            for j, comp in enumerate(self.components):
                if not m[i, j].is_zero():
                    acc = acc + comp.scale(m[i, j])
            out.append(acc)
        return PolyMap(out)

    def evaluate(self, point):
        return Vector(c.evaluate(point) for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self.components, other.components))

    __hash__ = None

    def to_texts(self, names=None):
        return [c.to_text(names) for c in self.components]

    def __repr__(self):
        return "PolyMap([" + ", ".join(self.to_texts()) + "])"


def diagonal_lift(gamma):
    """block_diag(gamma, gamma): the diagonal action on the doubled space."""
    return block_diag(gamma, gamma)


def gradient_map(f):
    """J grad f."""
    comps = [partial_derivative(f, i) for i in range(f.nvars)]
    comps[-1] = -comps[-1]
    return PolyMap(comps)


def pairing_invariant(g):
    """f(x, y) = <g(x), y> as a polynomial in the doubled variables."""
    m = len(g)
    if g.nvars != m:
        raise DimensionError("map must go from R^{n+1} to itself")
    total = Poly.constant(2 * m, 0)
    for i, comp in enumerate(g.components):
        y = Poly.variable(2 * m, m + i)
        term = extend_variables(comp, 2 * m) * y
        total = total - term if i == m - 1 else total + term
    return total


def equivariant_from_invariant(f):
    """g(x) = J (d_y f)^t evaluated at (x, 0)."""
    if f.nvars % 2:
        raise DimensionError("an invariant of the doubled space needs an even variable count")
    m = f.nvars // 2
    comps = [restrict_y_zero(partial_derivative(f, m + i)) for i in range(m)]
    comps[-1] = -comps[-1]
    return PolyMap(comps)


def is_equivariant(g, gamma):
    """g(gamma x) == gamma g(x)."""
    return g.compose(gamma) == g.apply_matrix(gamma)


def _map_vector(g):
    return {(i, sum(e), e): c for i, comp in enumerate(g.components) for e, c in comp.items()}


def module_generators(cartesian_gens, group=(), max_degree=None):
    """Generators of the module of equivariants from doubled-space invariants.

    Zero maps are dropped, and so is any map lying in the span of
    (invariant of bounded degree) x (retained map).  The invariant ring used
    for the coefficients is generated by the restrictions u(x, 0).
    """
    cartesian_gens = list(cartesian_gens)
    maps = [equivariant_from_invariant(u) for u in cartesian_gens]
    candidates = [(g.degree(), k, g) for k, g in enumerate(maps) if not g.is_zero()]
    if not candidates:
        return []
    if max_degree is None:
        max_degree = 2 * max(d for d, _, _ in candidates)
    ring = [restrict_y_zero(u) for u in cartesian_gens]
    ring = [r for r in ring if not r.is_constant()]
    products, _ = bounded_products(ring, max_degree)
    coefficients = [products[e] for e in sorted(products)] or [Poly.constant(len(maps[0]), 1)]
    ech = Echelon()
    kept = []
    for deg, k, g in sorted(candidates, key=lambda t: (t[0], t[1])):
        if ech.contains(_map_vector(g)):
            continue
        kept.append((k, g))
        for h in coefficients:
            if h.degree() + deg <= max_degree:
                ech.add(_map_vector(g.scale(h)))
    kept.sort(key=lambda t: t[0])
    result = [g for _, g in kept]
    for gamma in group:
        for g in result:
            if not is_equivariant(g, gamma):
                raise NotInvariantError(f"map {g} is not equivariant; generators were not invariant")
    return result
