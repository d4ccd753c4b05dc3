"""Exact coefficient field.

Scalars are fractions of elements of

    Q[c, s, p, q] / (c^2 - s^2 - 1, p^2 + q^2 - 1)

where ``c = cosh(t)``, ``s = sinh(t)``, ``p = cos(u)`` and ``q = sin(u)``.
Ring elements are kept in the normal form where ``c`` and ``p`` appear with
exponent at most one, which makes the ring a free ``Q[s, q]``-module on
``{1, c, p, cp}``; equality of ring elements is coefficient comparison and
equality of scalars is cross multiplication.

The text grammar understood by :func:`parse_scalar` is::

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := '-' factor | base ('^' uint)?
    base     := rational | 'cosh(t)' | 'sinh(t)' | 'cos(u)' | 'sin(u)' | '(' expr ')'
    rational := int ('/' uint)?
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .exceptions import ParseError, UndecidedError

# Monomial exponents are (c, s, p, q).
Monomial = tuple
ONE_MONO = (0, 0, 0, 0)
SYMBOL_TEXT = ("cosh(t)", "sinh(t)", "cos(u)", "sin(u)")


def _mono_key(m):
    # graded lexicographic, c > s > p > q
    return (sum(m), m)


def _add_into(acc, mono, coef):
    v = acc.get(mono)
    if v is None:
        acc[mono] = coef
    else:
        v += coef
        if v:
            acc[mono] = v
        else:
            del acc[mono]


def _binomial_expand(base_exp, idx, coef, sign):
    """Terms of coef * X^k where X^2 = sign + Y^2 for the paired symbol.

    ``idx`` is 0 (c, paired with s) or 2 (p, paired with q); the relation is
    c^2 = 1 + s^2 and p^2 = 1 - q^2.
    """
    a = base_exp[idx]
    half, rem = divmod(a, 2)
    out = []
    for j in range(half + 1):
        # (1 + y)^half with y = s^2 (sign=+1) or y = -q^2 (sign=-1)
        term_coef = coef * math.comb(half, j) * (sign**j)
        m = list(base_exp)
        m[idx] = rem
        m[idx + 1] += 2 * j
        out.append((tuple(m), term_coef))
    return out


def _reduce_mono(mono, coef):
    terms = [(mono, coef)]
    if mono[0] >= 2:
        terms = [t for m, cf in terms for t in _binomial_expand(m, 0, cf, 1)]
    if any(m[2] >= 2 for m, _ in terms):
        terms = [t for m, cf in terms for t in _binomial_expand(m, 2, cf, -1)]
    return terms


class RingElem:
    """Element of the quotient ring, stored as ``{monomial: Fraction}``."""

    __slots__ = ("_terms", "_laurent")

    def __init__(self, terms=None, *, _normal=False):
        self._laurent = None
        if _normal:
            self._terms = terms
            return
        acc = {}
        for mono, coef in (terms or {}).items():
            coef = Fraction(coef)
            if not coef:
                continue
            mono = tuple(mono)
            if mono[0] >= 2 or mono[2] >= 2:
                for m, cf in _reduce_mono(mono, coef):
                    _add_into(acc, m, cf)
            else:
                _add_into(acc, mono, coef)
        self._terms = acc

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        return cls({ONE_MONO: value} if value else {}, _normal=True)

    @classmethod
    def symbol(cls, index):
        mono = [0, 0, 0, 0]
        mono[index] = 1
        return cls({tuple(mono): Fraction(1)}, _normal=True)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self):
        return self._terms.get(ONE_MONO, Fraction(0))

    def symbols_used(self):
        used = [False] * 4
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(used)

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)

    def leading(self):
        mono = max(self._terms, key=_mono_key)
        return mono, self._terms[mono]

    def __add__(self, other):
        acc = dict(self._terms)
        for m, cf in other._terms.items():
            _add_into(acc, m, cf)
        return RingElem(acc, _normal=True)

    def __sub__(self, other):
        acc = dict(self._terms)
        for m, cf in other._terms.items():
            _add_into(acc, m, -cf)
        return RingElem(acc, _normal=True)

    def __neg__(self):
        return RingElem({m: -cf for m, cf in self._terms.items()}, _normal=True)

    def scale(self, k):
        k = Fraction(k)
        if not k:
            return RingElem({}, _normal=True)
        return RingElem({m: cf * k for m, cf in self._terms.items()}, _normal=True)

    def __mul__(self, other):
        if not self._terms or not other._terms:
            return RingElem({}, _normal=True)
        if self.is_constant():
            return other.scale(self.constant_value())
        if other.is_constant():
            return self.scale(other.constant_value())
        acc = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                cf = c1 * c2
                if m[0] == 2 or m[2] == 2:
                    for mm, cc in _reduce_mono(m, cf):
                        _add_into(acc, mm, cc)
                else:
                    _add_into(acc, m, cf)
        return RingElem(acc, _normal=True)

    def __pow__(self, k):
        result = RingElem.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, c, s, p=None, q=None):
        total = Fraction(0)
        for (a, b, e, f), cf in self._terms.items():
            val = cf
            if a:
                val *= c
            if b:
                val *= s**b
            if e or f:
                if p is None or q is None:
                    raise ValueError("trigonometric symbol present but no angle point supplied")
                if e:
                    val *= p
                if f:
                    val *= q**f
            total += val
        return total

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, cf) in enumerate(self.sorted_terms()):
            neg = cf < 0
            body = _term_text(mono, abs(cf))
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"RingElem({self.to_text()!r})"


def _fraction_text(value):
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _term_text(mono, coef):
    factors = []
    for sym, e in zip(SYMBOL_TEXT, mono):
        if e == 1:
            factors.append(sym)
        elif e > 1:
            factors.append(f"{sym}^{e}")
    if not factors:
        return _fraction_text(coef)
    if coef == 1:
        return "*".join(factors)
    return _fraction_text(coef) + "*" + "*".join(factors)


# -- hyperbolic parametrization ------------------------------------------------
#
# Q[c, s]/(c^2 - s^2 - 1) is isomorphic to the Laurent ring Q[z, 1/z] via
# z = c + s, 1/z = c - s.  That ring has a Euclidean gcd, which we use to cancel
# common factors of purely hyperbolic fractions.


def _laurent_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            v = out.get(i + j, 0) + x * y
            if v:
                out[i + j] = v
            else:
                out.pop(i + j, None)
    return out


_HALF = Fraction(1, 2)
_C_LAURENT = {1: _HALF, -1: _HALF}
_S_LAURENT = {1: _HALF, -1: -_HALF}


@lru_cache(maxsize=None)
def _mono_laurent(a, b):
    out = {0: Fraction(1)}
    for _ in range(b):
        out = _laurent_mul(out, _S_LAURENT)
    if a:
        out = _laurent_mul(out, _C_LAURENT)
    return tuple(out.items())


def _to_laurent(elem):
    if elem._laurent is not None:
        return elem._laurent
    acc = {}
    for (a, b, _, _), cf in elem.items():
        for k, v in _mono_laurent(a, b):
            nv = acc.get(k, 0) + cf * v
            if nv:
                acc[k] = nv
            else:
                acc.pop(k, None)
    elem._laurent = acc
    return acc


@lru_cache(maxsize=None)
def _z_power(k):
    base = RingElem.symbol(0) + (RingElem.symbol(1) if k >= 0 else -RingElem.symbol(1))
    return base ** abs(k)


def _from_laurent(laurent):
    out = RingElem()
    for k, v in laurent.items():
        out = out + _z_power(k).scale(v)
    return out


def _split_laurent(laurent):
    """Return (shift, dense coefficient list low->high) with nonzero constant."""
    lo = min(laurent)
    hi = max(laurent)
    return lo, [laurent.get(k, Fraction(0)) for k in range(lo, hi + 1)]


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(n, d):
    n = list(n)
    q = [Fraction(0)] * max(len(n) - len(d) + 1, 1)
    lead = d[-1]
    while len(n) >= len(d) and any(n):
        k = len(n) - len(d)
        f = n[-1] / lead
        q[k] = f
        for i, dc in enumerate(d):
            n[i + k] -= f * dc
        n.pop()
        _poly_trim(n)
    return _poly_trim(q), n


def _poly_gcd(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [x / lead for x in a]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sqrt(p):
    """Exact square root of a dense rational polynomial, or None."""
    p = _poly_trim(list(p))
    if not p:
        return []
    if (len(p) - 1) % 2:
        return None
    lead = _fraction_sqrt(p[-1])
    if lead is None:
        return None
    m = (len(p) - 1) // 2
    # determine root coefficients from the top down
    root = [Fraction(0)] * (m + 1)
    root[m] = lead
    for k in range(m - 1, -1, -1):
        # coefficient of x^(m + k) in root^2
        acc = Fraction(0)
        for i in range(k + 1, m + 1):
            j = m + k - i
            if k < j <= m:
                acc += root[i] * root[j]
        root[k] = (p[m + k] - acc) / (2 * lead)
    if _poly_mul(root, root) != p:
        return None
    return root


def _fraction_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _laurent_from_split(shift, dense):
    return {shift + i: v for i, v in enumerate(dense) if v}


def _hyperbolic_cancel(num, den):
    """Cancel non-unit common factors of two purely hyperbolic ring elements."""
    ln, ld = _to_laurent(num), _to_laurent(den)
    a, n = _split_laurent(ln)
    b, d = _split_laurent(ld)
    if len(d) == 1:
        # unit denominator: the value is a Laurent polynomial
        k = d[0]
        return _from_laurent({e - b: v / k for e, v in ln.items()}), RingElem.constant(1)
    if len(n) == 1:
        return num, den
    g = _poly_gcd(n, d)
    if len(g) <= 1:
        return num, den
    n2, r1 = _poly_divmod(n, g)
    d2, r2 = _poly_divmod(d, g)
    assert not r1 and not r2
    shift = a - b
    if len(d2) == 1:
        k = d2[0]
        return _from_laurent(_laurent_from_split(shift, [v / k for v in n2])), RingElem.constant(1)
    num_l = _laurent_from_split(max(shift, 0), n2)
    den_l = _laurent_from_split(max(-shift, 0), d2)
    return _from_laurent(num_l), _from_laurent(den_l)


# -- Scalar ---------------------------------------------------------------------


def _common_monomial(elems):
    lo = [None] * 4
    for e in elems:
        for m in e._terms:
            for i in range(4):
                lo[i] = m[i] if lo[i] is None else min(lo[i], m[i])
    return tuple(x or 0 for x in lo)


def _divide_monomial(elem, mono):
    return RingElem(
        {tuple(a - b for a, b in zip(m, mono)): cf for m, cf in elem._terms.items()},
        _normal=True,
    )


class Scalar:
    """Element of the fraction field; immutable.

    Construct from an int, Fraction, string (see :func:`parse_scalar`) or a
    pair of :class:`RingElem`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, Scalar) and den is None:
            self.num, self.den = num.num, num.den
            return
        if isinstance(num, str):
            parsed = parse_scalar(num)
            self.num, self.den = parsed.num, parsed.den
            return
        if not isinstance(num, RingElem):
            num = RingElem.constant(num)
        if den is None:
            den = RingElem.constant(1)
        elif not isinstance(den, RingElem):
            den = RingElem.constant(den)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def rational_value(self):
        """The value as a Fraction if it is rational, else None."""
        if self.num.is_zero():
            return Fraction(0)
        if self.num.is_constant() and self.den.is_constant():
            return self.num.constant_value() / self.den.constant_value()
        n_mono, n_lead = self.num.leading()
        d_mono, d_lead = self.den.leading()
        if n_mono != d_mono:
            return None
        k = n_lead / d_lead
        if self.num == self.den.scale(k):
            return k
        return None

    def is_rational(self):
        return self.rational_value() is not None

    def symbols_used(self):
        a = self.num.symbols_used()
        b = self.den.symbols_used()
        return tuple(x or y for x, y in zip(a, b))

    def sign(self):
        """Sign of a rational-valued scalar; symbolic values raise."""
        v = self.rational_value()
        if v is None:
            raise UndecidedError(f"sign of symbolic scalar {self} is not decidable")
        return (v > 0) - (v < 0)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = as_scalar(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        other = as_scalar(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_constant() and other.den.is_constant():
            k = 1 / (self.den.constant_value() * other.den.constant_value())
            return Scalar._raw((self.num * other.num).scale(k), RingElem.constant(1))
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar(self.num**k, self.den**k)

    def __eq__(self, other):
        if isinstance(other, (int, Rational, str)):
            other = as_scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    # Equality is by cross multiplication, so no canonical hash exists.
    __hash__ = None

    # -- evaluation ---------------------------------------------------------
    def evaluate(self, c, s, p=None, q=None):
        d = self.den.evaluate(c, s, p, q)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(c, s, p, q) / d

    def to_text(self):
        num = self.num.to_text()
        if self.den.is_constant():
            return num
        den = self.den.to_text()
        if len(self.num._terms) > 1:
            num = f"({num})"
        if len(self.den._terms) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Scalar({self.to_text()!r})"


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivisionError("division by zero scalar")
    one = RingElem.constant(1)
    if num.is_zero():
        return num, one
    if den.is_constant():
        return num.scale(1 / den.constant_value()), one
    common = _common_monomial((num, den))
    if any(common):
        num, den = _divide_monomial(num, common), _divide_monomial(den, common)
        if den.is_constant():
            return num.scale(1 / den.constant_value()), one
    used = tuple(x or y for x, y in zip(num.symbols_used(), den.symbols_used()))
    if not used[2] and not used[3]:
        num, den = _hyperbolic_cancel(num, den)
        if den.is_constant():
            return num.scale(1 / den.constant_value()), one
    # make den primitive over Z with positive leading coefficient
    coeffs = [cf for _, cf in den.items()]
    lcm = 1
    for cf in coeffs:
        lcm = lcm * cf.denominator // math.gcd(lcm, cf.denominator)
    g = 0
    for cf in coeffs:
        g = math.gcd(g, (cf * lcm).numerator)
    k = Fraction(lcm, g)
    if den.leading()[1] < 0:
        k = -k
    if k != 1:
        num, den = num.scale(k), den.scale(k)
    return num, den


ZERO = Scalar._raw(RingElem.constant(0), RingElem.constant(1))
ONE = Scalar._raw(RingElem.constant(1), RingElem.constant(1))
COSH = Scalar._raw(RingElem.symbol(0), RingElem.constant(1))
SINH = Scalar._raw(RingElem.symbol(1), RingElem.constant(1))
COS = Scalar._raw(RingElem.symbol(2), RingElem.constant(1))
SIN = Scalar._raw(RingElem.symbol(3), RingElem.constant(1))


def as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Scalar._raw(RingElem.constant(x), RingElem.constant(1))
    if isinstance(x, Rational):
        return Scalar._raw(RingElem.constant(Fraction(x)), RingElem.constant(1))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


def scalar_arith(a, b, op):
    """Dispatch ``op`` in {"add", "sub", "mul", "div"} on two scalars."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def hyperbolic_point(t):
    """(cosh, sinh) at the rational point z = t of the hyperbola."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("hyperbolic parameter must be positive")
    return (t + 1 / t) / 2, (t - 1 / t) / 2


def circle_point(u):
    """(cos, sin) at the rational point with half-angle tangent u."""
    u = Fraction(u)
    return (1 - u * u) / (1 + u * u), 2 * u / (1 + u * u)


def eval_hyperbolic(a, t, u=None):
    """Exact value of ``a`` at c=(t+1/t)/2, s=(t-1/t)/2 and optionally at u."""
    a = as_scalar(a)
    c, s = hyperbolic_point(t)
    p = q = None
    if u is not None:
        p, q = circle_point(u)
    elif any(a.symbols_used()[2:]):
        raise ValueError("trigonometric symbol present but no u supplied")
    return a.evaluate(c, s, p, q)


def substitute_point(a, c=None, s=None, p=None, q=None):
    """Replace some symbols by rational values, keeping the rest symbolic."""
    a = as_scalar(a)
    values = (c, s, p, q)

    def sub(elem):
        out = RingElem()
        for mono, cf in elem.items():
            term = RingElem.constant(cf)
            for i, e in enumerate(mono):
                if not e:
                    continue
                if values[i] is None:
                    m = [0, 0, 0, 0]
                    m[i] = e
                    term = term * RingElem({tuple(m): 1})
                else:
                    term = term.scale(Fraction(values[i]) ** e)
            out = out + term
        return out

    return Scalar(sub(a.num), sub(a.den))


def exact_sqrt(a):
    """A square root of ``a`` in the field, or None when none is found.

    Decided exactly for rational values and for purely hyperbolic values; other
    symbolic values return None.
    """
    a = as_scalar(a)
    v = a.rational_value()
    if v is not None:
        r = _fraction_sqrt(v)
        return None if r is None else as_scalar(r)
    used = a.symbols_used()
    if used[2] or used[3]:
        return None
    # sqrt(N/D) = sqrt(N*D)/D
    nd = _to_laurent(a.num * a.den)
    shift, dense = _split_laurent(nd)
    if shift % 2:
        return None
    root = _poly_sqrt(dense)
    if root is None:
        return None
    num = _from_laurent(_laurent_from_split(shift // 2, root))
    return Scalar(num, a.den)


# -- parsing --------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


_FUNCTIONS = {"cosh": ("t", COSH), "sinh": ("t", SINH), "cos": ("u", COS), "sin": ("u", SIN)}


class ExpressionParser:
    """Recursive-descent parser for the scalar grammar.

    ``variables`` maps extra bare names (polynomial variables) to values, and
    ``lift`` turns a Scalar into the value type being built.  ``divide`` is
    called for '/' so callers can restrict what may appear in a denominator.
    """

    def __init__(self, text, variables=None, lift=None, divide=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables or {}
        self.lift = lift or (lambda x: x)
        self.divide = divide or (lambda a, b: a / b)

    def _peek(self, k=0):
        return self.tokens[self.i + k]

    def _error(self, message, expected=None):
        return ParseError(message, self.text, self._peek()[2], expected)

    def _expect(self, kind, value=None):
        tok = self._peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise self._error(f"unexpected {tok[1] or 'end of input'!r}", value or kind)
        self.i += 1
        return tok

    def parse(self):
        if self._peek()[0] == "end":
            raise self._error("empty expression", "expression")
        value = self.expr()
        if self._peek()[0] != "end":
            raise self._error(f"unexpected {self._peek()[1]!r}", "operator or end of input")
        return value

    def expr(self):
        value = self.term()
        while self._peek()[0] == "op" and self._peek()[1] in ("+", "-"):
            op = self._peek()[1]
            self.i += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self._peek()[0] == "op" and self._peek()[1] in "*/":
            op = self._peek()[1]
            self.i += 1
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = self.divide(value, rhs)
                except ZeroDivisionError:
                    raise ZeroDivisionError(
                        f"division by zero at position {self.tokens[self.i - 1][2]}"
                    ) from None
        return value

    def factor(self):
        tok = self._peek()
        if tok[0] == "op" and tok[1] == "-":
            self.i += 1
            return -self.factor()
        value = self.base()
        if self._peek()[0] == "op" and self._peek()[1] == "^":
            self.i += 1
            exp = self._expect("int")
            value = value ** int(exp[1])
        return value

    def base(self):
        tok = self._peek()
        if tok[0] == "int":
            self.i += 1
            value = Fraction(int(tok[1]))
            if self._peek()[1] == "/" and self._peek(1)[0] == "int":
                den = int(self._peek(1)[1])
                if den == 0:
                    raise ZeroDivisionError(f"division by zero at position {self._peek()[2]}")
                self.i += 2
                value = value / den
            return self.lift(as_scalar(value))
        if tok[0] == "name":
            name = tok[1]
            if name in _FUNCTIONS:
                arg, sym = _FUNCTIONS[name]
                self.i += 1
                self._expect("op", "(")
                self._expect("name", arg)
                self._expect("op", ")")
                return self.lift(sym)
            if name in self.variables:
                self.i += 1
                return self.variables[name]
            raise self._error(f"unknown name {name!r}", "number, function or '('")
        if tok[0] == "op" and tok[1] == "(":
            self.i += 1
            value = self.expr()
            self._expect("op", ")")
            return value
        raise self._error(f"unexpected {tok[1] or 'end of input'!r}", "number, function or '('")


def parse_scalar(text):
    """Parse an expression in the scalar grammar into a normal-form Scalar."""
    return ExpressionParser(text).parse()
