"""Exact rationals and dense univariate polynomials over a commutative ring.

Rationals are :class:`fractions.Fraction`.  A :class:`UniPoly` stores its
coefficients in ascending degree; a coefficient is either a ``Fraction`` or
another ``UniPoly`` in an inner variable, which gives the tower
``Q[t][x]`` used for families of polynomials.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZeroPoly, ParseError

Rational = Fraction

#: Degree of the zero polynomial.  Compares below every integer.
NEG_INF = float("-inf")

# Nesting order of variable names, innermost first.  A polynomial in a later
# name may have coefficients that are polynomials in an earlier one.
VARIABLE_ORDER = ("t", "t1", "y", "x")

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional leading minus sign.

    Both the ASCII hyphen and U+2212 are accepted as the sign.  Whitespace,
    decimal points and zero denominators are rejected.

    >>> parse_rational("-6/4")
    Fraction(-3, 2)
    >>> format_rational(parse_rational("10/5"))
    '2'
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    s = text.replace("−", "-")
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"malformed rational {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _rank(var: str) -> int:
    try:
        return VARIABLE_ORDER.index(var)
    except ValueError:
        return -1


def _is_zero(c) -> bool:
    return not c


def _normalize(c):
    if isinstance(c, UniPoly):
        return c
    return as_rational(c)


class UniPoly:
    """Dense polynomial ``sum(coeffs[i] * var**i)``.

    Instances are immutable.  Trailing zero coefficients are trimmed on
    construction, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [_normalize(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "x") -> UniPoly:
        return cls([0] * k + [c], var)

    @classmethod
    def constant(cls, c, var: str = "x") -> UniPoly:
        return cls([c], var)

    @classmethod
    def from_roots(cls, roots: Sequence, var: str = "x") -> UniPoly:
        p = cls([1], var)
        for r in roots:
            p = p * cls([-as_rational(r), 1], var)
        return p

    # -- basic accessors ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        """Leading coefficient; ``Fraction(0)`` for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        """Return ``other`` as a polynomial in ``self.var``, or None when
        ``other`` belongs to an enclosing ring."""
        if isinstance(other, UniPoly):
            if other.var == self.var:
                return other
            ro, rs = _rank(other.var), _rank(self.var)
            if ro > rs >= 0:
                return None
            return UniPoly((other,), self.var)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly((other,), self.var)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            # same Python type, so the reflected method is never tried
            return other.__add__(self) if isinstance(other, UniPoly) else NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return other.__rsub__(self) if isinstance(other, UniPoly) else NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return other.__mul__(self) if isinstance(other, UniPoly) else NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly((), self.var)
        if len(b) == 1:
            c = b[0]
            return UniPoly([ai * c for ai in a], self.var)
        if len(a) == 1:
            c = a[0]
            return UniPoly([c * bi for bi in b], self.var)
        out = [None] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                term = ai * bj
                k = i + j
                out[k] = term if out[k] is None else out[k] + term
        return UniPoly([Fraction(0) if c is None else c for c in out], self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = UniPoly((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        """Divide every coefficient by a scalar of the coefficient ring."""
        if isinstance(other, UniPoly) and other.var == self.var:
            if other.is_constant() and other:
                other = other.coeffs[0]
            else:
                return NotImplemented
        if not other:
            raise DivisionByZeroPoly("division by zero")
        return UniPoly([_exact_div(c, other) for c in self.coeffs], self.var)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.coeffs, self.var))

    # -- calculus and evaluation ------------------------------------------

    def derivative(self) -> UniPoly:
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, value):
        return self.eval(value)

    def eval(self, value):
        """Horner evaluation at ``value``."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def map_coeffs(self, fn) -> UniPoly:
        return UniPoly([fn(c) for c in self.coeffs], self.var)

    def eval_coeffs(self, value) -> UniPoly:
        """Substitute ``value`` for the inner variable of every coefficient."""
        return self.map_coeffs(lambda c: c(value) if isinstance(c, UniPoly) else c)

    def mirror(self) -> UniPoly:
        """``p(-var)``."""
        return UniPoly([-c if i % 2 else c for i, c in enumerate(self.coeffs)], self.var)

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        return self / self.lc

    def trailing_power(self) -> int:
        """Largest ``k`` with ``var**k`` dividing ``self`` (0 for zero)."""
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        return 0

    def shift_down(self, k: int) -> UniPoly:
        """Drop the lowest ``k`` coefficients, i.e. divide by ``var**k``."""
        if any(not _is_zero(c) for c in self.coeffs[:k]):
            raise ValueError(f"{self.var}^{k} does not divide the polynomial")
        return UniPoly(self.coeffs[k:], self.var)

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if isinstance(c, UniPoly):
                cs = f"({c})"
                terms.append(cs if not mono else f"{cs}*{mono}")
                continue
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = format_rational(c)
                terms.append(cs if not mono else f"{cs}*{mono}")
        out = " + ".join(terms)
        return out.replace("+ -", "- ")


def _exact_div(a, b):
    if isinstance(a, UniPoly):
        return a / b
    if isinstance(b, UniPoly):
        if b.is_constant():
            return a / b.coeffs[0]
        raise ValueError("cannot divide a scalar by a non-constant polynomial")
    return a / b


def poly_arith(a: UniPoly, b: UniPoly, op: str) -> UniPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def derivative(f: UniPoly) -> UniPoly:
    return f.derivative()


def divrem(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``.

    The coefficients must lie in a field (rationals).
    """
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    var = f.var if f.coeffs else g.var
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    inv = 1 / g.lc
    if len(r) - 1 < dg:
        return UniPoly((), var), UniPoly(r, var)
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * inv
        q[k] = c
        if c:
            for j, gj in enumerate(g.coeffs):
                r[k + j] -= c * gj
    return UniPoly(q, var), UniPoly(r[:dg], var)


def exquo(f: UniPoly, g: UniPoly) -> UniPoly:
    """Exact quotient ``f / g``; raises if the division leaves a remainder."""
    q, r = divrem(f, g)
    if r:
        raise ValueError("division is not exact")
    return q


def gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (zero when both inputs are zero)."""
    while g:
        f, g = g, divrem(f, g)[1]
    return f.monic()


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.is_zero():
        return f
    g = gcd(f, f.derivative())
    return exquo(f, g)


def cauchy_bound(f: UniPoly) -> Fraction:
    """``1 + max|a_i| / |a_n|``: every complex root has modulus below it."""
    lc = abs(f.lc)
    return 1 + max((abs(c) for c in f.coeffs[:-1]), default=Fraction(0)) / lc


# -- JSON encoding ---------------------------------------------------------

def poly_to_json(p) -> list:
    """Ascending coefficient list; polynomial coefficients nest as lists."""
    if not isinstance(p, UniPoly):
        return [format_rational(p)] if p else []
    return [poly_to_json(c) if isinstance(c, UniPoly) else format_rational(c) for c in p.coeffs]


def poly_from_json(obj, var: str = "x", inner_var: str = "t") -> UniPoly:
    if not isinstance(obj, list):
        raise ParseError("a polynomial must be a JSON array of rational strings")
    coeffs = []
    for c in obj:
        if isinstance(c, list):
            coeffs.append(poly_from_json(c, inner_var, inner_var="t1"))
        else:
            coeffs.append(parse_rational(c))
    return UniPoly(coeffs, var)


def element_to_json(c):
    """Encode a ring element: rational string or coefficient array."""
    if isinstance(c, UniPoly):
        return poly_to_json(c)
    return format_rational(c)


def element_from_json(obj, var: str = "t"):
    if isinstance(obj, list):
        return poly_from_json(obj, var)
    return parse_rational(obj)
