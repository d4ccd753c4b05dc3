"""Multivariate polynomials over the scalar field.

Polynomials are sparse maps from exponent tuples to scalars.  Besides ring
arithmetic this module provides substitution by a linear map, formal
derivatives, and two exact linear-algebra oracles: :func:`linear_reduce`
(maximal independent sublist) and :func:`algebra_member_bounded`
(membership in the degree-bounded subalgebra generated by a list).
"""

from __future__ import annotations

import itertools

from .exceptions import DimensionError, ParseError
from .scalar import ONE, ZERO, ExpressionParser, Scalar, as_scalar


def _mono_key(e):
    return (sum(e), e)


class Poly:
    """Polynomial in ``nvars`` variables with Scalar coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise DimensionError(f"exponent vector {exps} does not have length {nvars}")
            coef = as_scalar(coef)
            if coef.is_zero():
                continue
            if exps in clean:
                coef = clean[exps] + coef
                if coef.is_zero():
                    del clean[exps]
                    continue
            clean[exps] = coef
        self._terms = clean

    @classmethod
    def _from_clean(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, nvars, value):
        value = as_scalar(value)
        if value.is_zero():
            return cls._from_clean(nvars, {})
        return cls._from_clean(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index):
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars} variables")
        e = [0] * nvars
        e[index] = 1
        return cls._from_clean(nvars, {tuple(e): ONE})

    @classmethod
    def linear_form(cls, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_scalar(c)
            if not c.is_zero():
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls._from_clean(n, terms)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), ZERO)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionError(f"polynomials in {self.nvars} and {other.nvars} variables")
            return other
        return Poly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            if e in acc:
                v = acc[e] + c
                if v.is_zero():
                    del acc[e]
                else:
                    acc[e] = v
            else:
                acc[e] = c
        return Poly._from_clean(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_clean(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, k):
        k = as_scalar(k)
        if k.is_zero():
            return Poly._from_clean(self.nvars, {})
        return Poly._from_clean(self.nvars, {e: k * c for e, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        acc = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in acc:
                    v = acc[e] + v
                acc[e] = v
        return Poly._from_clean(self.nvars, {e: c for e, c in acc.items() if not c.is_zero()})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("polynomials may only be divided by nonzero constants")
            other = other.coefficient((0,) * other.nvars)
        return self.scale(as_scalar(1) / as_scalar(other))

    def __pow__(self, k):
        result = Poly.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.nvars != other.nvars or self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[e] for e, c in self._terms.items())

    __hash__ = None

    def evaluate(self, point):
        point = [as_scalar(x) for x in point]
        if len(point) != self.nvars:
            raise DimensionError("point has the wrong number of coordinates")
        total = ZERO
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x**k
            total = total + term
        return total

    def to_text(self, names=None):
        return poly_to_text(self, names)

    def __repr__(self):
        return f"Poly({self.to_text()!r})"


# -- naming and text form -------------------------------------------------------


def variable_names(nvars, doubled=False):
    if doubled:
        if nvars % 2:
            raise DimensionError("a doubled variable set needs an even count")
        m = nvars // 2
        return [f"x{i}" for i in range(1, m + 1)] + [f"y{i}" for i in range(1, m + 1)]
    return [f"x{i}" for i in range(1, nvars + 1)]


def _default_names(nvars):
    return variable_names(nvars)


def _looks_negative(c):
    if c.is_polynomial() and len(c.num._terms) == 1:
        return c.num.leading()[1] < 0
    return False


def _coef_text(c):
    if c.is_polynomial() and len(c.num._terms) == 1:
        return c.to_text()
    return f"({c.to_text()})"


def poly_to_text(f, names=None):
    names = names or _default_names(f.nvars)
    if f.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(f.sorted_terms()):
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        neg = _looks_negative(c)
        if neg:
            c = -c
        if not mono:
            body = _coef_text(c)
        elif c == ONE:
            body = mono
        else:
            body = f"{_coef_text(c)}*{mono}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def parse_poly(text, nvars, names=None):
    """Parse the polynomial text form; coefficients use the scalar grammar."""
    names = names or _default_names(nvars)
    if len(names) != nvars:
        raise DimensionError("need one name per variable")
    variables = {n: Poly.variable(nvars, i) for i, n in enumerate(names)}

    def lift(s):
        return Poly.constant(nvars, s)

    def divide(a, b):
        if not b.is_constant():
            raise ParseError("division by a non-constant polynomial", text, 0, "constant divisor")
        return a / b

    return ExpressionParser(text, variables, lift, divide).parse()


# -- operations -----------------------------------------------------------------


def substitute_linear(f, m):
    """f(Mx), expanded."""
    if not m.is_square() or m.rows != f.nvars:
        raise DimensionError(f"need a {f.nvars}x{f.nvars} matrix, got {m.shape}")
    forms = [Poly.linear_form(m.entries[i]) for i in range(f.nvars)]
    powers = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = forms[i] if k == 1 else power(i, k - 1) * forms[i]
        return powers[key]

    out = Poly.constant(f.nvars, 0)
    for e, c in f.sorted_terms():
        term = Poly.constant(f.nvars, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out


def partial_derivative(f, i):
    """Formal derivative with respect to variable ``i`` (0-based)."""
    if not 0 <= i < f.nvars:
        raise DimensionError(f"variable index {i} out of range for {f.nvars} variables")
    terms = {}
    for e, c in f.items():
        k = e[i]
        if k:
            e2 = list(e)
            e2[i] -= 1
            terms[tuple(e2)] = c * k
    return Poly._from_clean(f.nvars, terms)


def restrict_y_zero(f):
    """Set the second half of the variables to zero."""
    if f.nvars % 2:
        raise DimensionError("restriction needs an even number of variables")
    m = f.nvars // 2
    terms = {e[:m]: c for e, c in f.items() if not any(e[m:])}
    return Poly._from_clean(m, terms)


def extend_variables(f, nvars, offset=0):
    """Embed ``f`` into a ring with ``nvars`` variables starting at ``offset``."""
    terms = {}
    for e, c in f.items():
        full = [0] * nvars
        full[offset : offset + f.nvars] = e
        terms[tuple(full)] = c
    return Poly._from_clean(nvars, terms)


class Echelon:
    """Incrementally maintained echelon basis of sparse coefficient vectors.

    Vectors are dicts ``key -> Scalar``; keys only need to be hashable and
    sortable.
    """

    def __init__(self):
        self.rows = []  # (pivot_key, normalized row)

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        vec = dict(vec)
        for key, row in self.rows:
            f = vec.get(key)
            if f is None:
                continue
            for k, v in row.items():
                nv = vec.get(k, ZERO) - f * v
                if nv.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        return vec

    def add(self, vec):
        """Insert ``vec``; returns True when it was independent."""
        vec = self.reduce(vec)
        if not vec:
            return False
        key = max(vec)
        inv = vec[key].inverse()
        self.rows.append((key, {k: v * inv for k, v in vec.items()}))
        return True

    def contains(self, vec):
        return not self.reduce(vec)


def _poly_vector(f):
    return {_mono_key(e): c for e, c in f.items()}


def linear_reduce(fs):
    """Maximal linearly independent sublist of ``fs``.

    Candidates are considered lowest degree first (ties in input order) and
    the survivors are returned in input order.
    """
    order = sorted(range(len(fs)), key=lambda i: (fs[i].degree(), i))
    ech = Echelon()
    keep = set()
    for i in order:
        if ech.add(_poly_vector(fs[i])):
            keep.add(i)
    return [f for i, f in enumerate(fs) if i in keep]


def same_span(fs, gs):
    ech = Echelon()
    for f in fs:
        ech.add(_poly_vector(f))
    if not all(ech.contains(_poly_vector(g)) for g in gs):
        return False
    ech2 = Echelon()
    for g in gs:
        ech2.add(_poly_vector(g))
    return all(ech2.contains(_poly_vector(f)) for f in fs)


def bounded_products(gens, max_degree):
    """All products of ``gens`` of total degree <= max_degree, including 1.

    Zero and constant generators are ignored.  Returns a dict from exponent
    tuples (over the filtered generator list) to polynomials.
    """
    gens = [g for g in gens if not g.is_constant()]
    if not gens:
        return {}, gens
    nvars = gens[0].nvars
    degs = [g.degree() for g in gens]
    products = {(0,) * len(gens): Poly.constant(nvars, 1)}
    frontier = [(0,) * len(gens)]
    while frontier:
        nxt = []
        for e in frontier:
            weight = sum(k * d for k, d in zip(e, degs))
            start = max((i for i, k in enumerate(e) if k), default=0)
            for i in range(start, len(gens)):
                if weight + degs[i] > max_degree:
                    continue
                e2 = list(e)
                e2[i] += 1
                e2 = tuple(e2)
                if e2 not in products:
                    products[e2] = products[e] * gens[i]
                    nxt.append(e2)
        frontier = nxt
    return products, gens


def is_homogeneous(f):
    return len({sum(e) for e, _ in f.items()}) <= 1


def algebra_member_bounded(f, gens, max_degree):
    """True iff ``f`` lies in the span of products of ``gens`` of degree <= max_degree."""
    products, gens = bounded_products(gens, max_degree)
    if not products:
        return f.is_constant()
    degrees = None
    if all(is_homogeneous(g) for g in gens):
        # graded case: only products in the degrees of f can contribute
        degrees = {sum(e) for e, _ in f.items()}
    ech = Echelon()
    for e in sorted(products):
        p = products[e]
        if degrees is None or p.degree() in degrees:
            ech.add(_poly_vector(p))
    return ech.contains(_poly_vector(f))


def algebras_equivalent(fs, gs, max_degree):
    """Mutual bounded membership of two generator lists."""
    return all(algebra_member_bounded(f, gs, max_degree) for f in fs) and all(
        algebra_member_bounded(g, fs, max_degree) for g in gs
    )


def monomials_up_to(nvars, degree):
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            yield tuple(e)
