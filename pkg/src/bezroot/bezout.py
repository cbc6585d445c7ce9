"""Bezoutian matrices.

The Bezoutian of ``f1, f2`` with respect to order ``n`` is the symmetric
matrix ``(a_ij)`` of

    (f1(x) f2(y) - f1(y) f2(x)) / (x - y) = sum a_ij x^(n-i) y^(n-j),

indices running from 1 to ``n``.  It is assembled by bilinearity from the
Bezoutians of monomial pairs, each of which is a 0/1 anti-diagonal band.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadExponents, BadOrder
from .exactalg import UniPoly
from .linalg import Matrix, SymMatrix, anti_identity, congruence


def _monomial_positions(lam: int, mu: int, nu: int):
    """0-based positions of the ones in ``M_lam(x^mu, x^nu)``, ``mu > nu``."""
    # (x^mu y^nu - x^nu y^mu)/(x - y) = sum_{k=1}^{mu-nu} x^(mu-k) y^(nu+k-1)
    for k in range(1, mu - nu + 1):
        yield lam - mu + k - 1, lam - nu - k


def bezout_monomial(lam: int, mu: int, nu: int) -> SymMatrix:
    """Bezoutian ``M_lam(x^mu, x^nu)`` for ``lam >= mu > nu >= 0``.

    Entry ``(i, j)`` (1-based) is 1 exactly when ``i + j = 2*lam - (mu+nu) + 1``
    and ``lam - mu + 1 <= i, j <= lam - nu``.

    >>> [[int(e) for e in row] for row in bezout_monomial(3, 2, 1)]
    [[0, 0, 0], [0, 1, 0], [0, 0, 0]]
    """
    if not (lam >= mu > nu >= 0):
        raise BadExponents(f"need lam >= mu > nu >= 0, got ({lam}, {mu}, {nu})")
    rows = [[Fraction(0)] * lam for _ in range(lam)]
    for i, j in _monomial_positions(lam, mu, nu):
        rows[i][j] = Fraction(1)
    return SymMatrix(rows)


def _ring_zero(*polys: UniPoly):
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, UniPoly):
                return c * 0
    return Fraction(0)


def bezout_matrix(f1: UniPoly, f2: UniPoly, n: int | None = None) -> SymMatrix:
    """Bezoutian matrix ``M_n(f1, f2)``.

    Coefficients may be rationals or polynomials in an inner variable; the
    result then has polynomial entries.  ``n`` defaults to the larger degree.
    """
    d = max(len(f1.coeffs), len(f2.coeffs)) - 1
    if n is None:
        n = max(d, 0)
    if n < d:
        raise BadOrder(f"order {n} is below the degree {d}")
    zero = _ring_zero(f1, f2)
    rows = [[zero] * n for _ in range(n)]
    a, b = f1.coeffs, f2.coeffs
    for p, ap in enumerate(a):
        if not ap:
            continue
        for q, bq in enumerate(b):
            if not bq or p == q:
                continue
            c = ap * bq
            if p > q:
                hi, lo = p, q
            else:
                hi, lo, c = q, p, -c
            for i, j in _monomial_positions(n, hi, lo):
                rows[i][j] = rows[i][j] + c
    return SymMatrix(rows)


def bezout_of(f: UniPoly, n: int | None = None) -> SymMatrix:
    """``M_n(f) = M_n(f, f')``, the Bezoutian matrix of ``f``."""
    return bezout_matrix(f, f.derivative(), n)


def reversed_bezout(f1: UniPoly, f2: UniPoly, n: int | None = None) -> SymMatrix:
    """Bezoutian indexed by ``x^(i-1) y^(j-1)`` instead of ``x^(n-i) y^(n-j)``."""
    m = bezout_matrix(f1, f2, n)
    k = m.order
    return SymMatrix([[m[k - 1 - i][k - 1 - j] for j in range(k)] for i in range(k)])


def reversed_by_congruence(f1: UniPoly, f2: UniPoly, n: int | None = None) -> Matrix:
    m = bezout_matrix(f1, f2, n)
    return congruence(anti_identity(m.order), m)
