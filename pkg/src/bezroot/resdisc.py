"""Sylvester resultants and discriminants over Q and Q[t]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bezout import bezout_of
from .errors import DegenerateFamily, DegreeOrder, DegreeTooSmall, ZeroPolynomial
from .exactalg import UniPoly
from .linalg import Matrix, _div, det


def sylvester_matrix(f: UniPoly, g: UniPoly) -> Matrix:
    """``deg g`` shifted rows of ``f`` above ``deg f`` shifted rows of ``g``.

    Coefficients run from the leading one down, as in the usual layout.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    m, k = f.degree, g.degree
    size = m + k
    zero = Fraction(0)
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(k):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - k - 1 - i))
    return Matrix(rows)


def resultant(f: UniPoly, g: UniPoly):
    """Determinant of the Sylvester matrix; ``Res(x - a, x - b) = a - b``."""
    return det(sylvester_matrix(f, g))


def discriminant(f: UniPoly):
    """``(-1)^(n(n-1)/2) Res(f, f') / led(f)`` with ``n = deg f``.

    >>> x = UniPoly([0, 1])
    >>> discriminant(x**2 + 3*x + 2), discriminant(x**3 - x)
    (Fraction(1, 1), Fraction(4, 1))
    """
    n = f.degree
    if f.is_zero() or n < 2:
        raise DegreeTooSmall(f"discriminant needs degree >= 2, got {n}")
    r = resultant(f, f.derivative())
    if (n * (n - 1) // 2) % 2:
        r = -r
    return _div(r, f.lc)


@dataclass(frozen=True)
class BezoutDiscCheck:
    det_bezout: object
    disc: object
    ratio: Optional[Fraction]


def bezout_disc_check(f: UniPoly) -> BezoutDiscCheck:
    """Compare ``det M_n(f)`` with the discriminant of ``f``.

    For monic ``f`` the two agree.  In general ``det M_n(f) = led(f)^2 * D_f``
    (measured over degrees 2..8 with random leading coefficients).
    """
    if f.degree < 2:
        raise DegreeTooSmall(f"degree >= 2 required, got {f.degree}")
    d = det(bezout_of(f))
    D = discriminant(f)
    ratio = None if not D else d / D
    return BezoutDiscCheck(d, D, ratio)


def family_polynomial(n: int, g: UniPoly, var: str = "t") -> UniPoly:
    """``x^n + t*g(x)`` as a polynomial in ``x`` over ``Q[t]``."""
    if n <= g.degree:
        raise DegreeOrder(f"need n > deg g, got n={n}, deg g={g.degree}")
    t = UniPoly([0, 1], var)
    coeffs = [t * c for c in g.coeffs]
    coeffs += [UniPoly((), var)] * (n + 1 - len(coeffs))
    coeffs[n] = coeffs[n] + 1
    return UniPoly(coeffs, "x")


@dataclass(frozen=True)
class DiscInT:
    full: UniPoly
    stripped: UniPoly
    t_power: int
    expected_power: int  # n - 1, the power the closed form divides out
    reduced_poly: Optional[UniPoly]  # full / t^(n-1), when that divides

    @property
    def matches_expected_power(self) -> bool:
        return self.t_power == self.expected_power

    def to_json(self) -> dict:
        from .exactalg import poly_to_json

        return {
            "full": poly_to_json(self.full),
            "stripped": poly_to_json(self.stripped),
            "t_power": self.t_power,
            "expected_power": self.expected_power,
            "matches_expected_power": self.matches_expected_power,
            "stripped_degree": self.stripped.degree,
            "reduced_poly": None if self.reduced_poly is None else poly_to_json(self.reduced_poly),
            "reduced_poly_degree": None if self.reduced_poly is None else self.reduced_poly.degree,
        }


def disc_in_t(spec=None, *, n: Optional[int] = None, g: Optional[UniPoly] = None) -> DiscInT:
    """Discriminant of ``x^n + t*g(x)`` in ``x``, as a polynomial in ``t``.

    Accepts anything with ``.n`` and ``.g`` attributes, or ``n=`` and ``g=``.
    """
    if spec is not None:
        n, g = spec.n, spec.g
    if g is None or g.is_zero():
        raise DegenerateFamily("g must be a nonzero polynomial")
    s = g.degree
    f = family_polynomial(n, g)
    full = discriminant(f)
    if not isinstance(full, UniPoly):
        full = UniPoly((full,), "t")
    if full.is_zero():
        raise DegenerateFamily("discriminant vanishes identically in t")
    k = full.trailing_power()
    if k < n - s - 1:
        raise ArithmeticError(f"t^{n - s - 1} should divide the discriminant, found only t^{k}")
    cor = full.shift_down(n - 1) if k >= n - 1 else None
    return DiscInT(full, full.shift_down(k), k, n - 1, cor)
