"""Block structure of the Bezoutian of ``x^n + t*g(x)``.

Writing ``A(t) = M_n(x^n + t*g)``, the first row of ``A`` is ``n`` followed
by zeros except at columns ``n-s+k+1`` where it holds ``(s-k) r_(s-k) t``.
Eliminating that row against the ``(1, 1)`` pivot leaves a trailing
``s x s`` block whose ``t^2`` part is

    Bbar_ij = B_ij - (s-i+1)(s-j+1)/n * r_(s-i+1) r_(s-j+1),

``B = M_s(g)``.  The signature of ``Bbar`` equals the number of real roots
of ``g``, and the leading ``(n-s) x (n-s)`` block contributes 1, 0 or 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .bezout import bezout_of
from .errors import BadSign, OutOfRange, ZeroXi
from .exactalg import UniPoly, as_rational, format_rational
from .family import FamilySpec
from .inertia import Inertia, charpoly, inertia_by_congruence
from .linalg import Matrix, SymMatrix, congruence, identity, shear_matrix
from .realroots import count_real_roots


def bbar_from_coeffs(r: Sequence, n: int) -> SymMatrix:
    """``Bbar`` for ``g = sum r[k] x^k``; entries may be polynomials."""
    s = len(r) - 1
    g = UniPoly(r, "x")
    B = bezout_of(g, s)
    rows = B.rows()
    for i in range(s):
        for j in range(s):
            corr = r[s - i] * r[s - j]
            if corr:
                rows[i][j] = rows[i][j] - corr * Fraction((s - i) * (s - j), n)
    return SymMatrix(rows)


def bbar_matrix(spec: FamilySpec) -> SymMatrix:
    return bbar_from_coeffs(spec.r, spec.n)


def u_coefficients(s: int, var: str = "t1") -> list:
    """Coefficients of ``x^s + t1*x + 1`` (``t1*x + 1`` when ``s == 1``)."""
    t1 = UniPoly([0, 1], var)
    if s == 1:
        return [Fraction(1), t1]
    return [Fraction(1), t1] + [Fraction(0)] * (s - 2) + [Fraction(1)]


def phi_charpoly_u(s: int, n: int) -> UniPoly:
    """Characteristic polynomial of ``Bbar`` for ``g = x^s + t1*x + 1``.

    The result is a polynomial in ``x`` whose coefficients lie in ``Q[t1]``.
    """
    if not (n > s >= 1):
        raise OutOfRange(f"need n > s >= 1, got s={s}, n={n}")
    return charpoly(bbar_from_coeffs(u_coefficients(s), n))


@dataclass(frozen=True)
class LeadingTerm:
    degree: int
    coefficient: Fraction
    case: str

    def to_json(self) -> dict:
        return {"degree": self.degree, "coefficient": format_rational(self.coefficient), "case": self.case}


def _b2_factor(s: int, n: int, k: int) -> Fraction:
    """Closed form of the bracketed sum in case (b2), times the binomial."""
    q = k * (k + s * s - 4 * s + 2)
    num = s * ((q - s**3 + 4 * s**2 - 5 * s + 2) * n - q)
    return Fraction(num, n * k * (s - 2)) * comb((s - 2) // 2, (k - 2) // 2)


def b2_factor_unsimplified(s: int, n: int, k: int) -> Fraction:
    """The four-term sum of case (b2) before simplification."""
    c1 = comb((s - 2) // 2, (k - 2) // 2)
    c2 = comb((s - 4) // 2, (k - 2) // 2)
    c3 = comb((s - 2) // 2, k // 2)
    return (
        Fraction(s * (n - s) * (n - 1), n * n) * c1
        - Fraction(s * (n - 1), n) * c2
        - (s - 1) ** 2 * c3
        - Fraction((n - s) ** 2, n * n) * c1
    )


def leading_term_h(s: int, n: int, k: int) -> LeadingTerm:
    """Leading term in ``t1`` of the ``x^(s-k)`` coefficient of ``phi_charpoly_u(s, n)``.

    Cases follow the parity of ``s`` and ``k``: (a1)-(a3) for odd ``s``,
    (b1)-(b3) for even ``s``.
    """
    if s < 3 or n <= s or not 1 <= k <= s:
        raise OutOfRange(f"need s >= 3, n > s, 1 <= k <= s; got s={s}, n={n}, k={k}")
    w = -((s - 1) ** 2)  # weight of one pair of (s-1)*t1 anti-diagonal entries
    lead = -Fraction(n - 1, n)  # from the (s, s) entry x - (n-1) t1^2 / n
    if s % 2:
        if k == s:
            return LeadingTerm(s, Fraction((-1) ** ((s - 3) // 2) * (n - s) * (s - 1) ** (s - 1), n), "a2")
        if k % 2:
            c = lead * comb((s - 3) // 2, (k - 1) // 2) * w ** ((k - 1) // 2)
            return LeadingTerm(k + 1, c, "a1")
        c = lead * comb((s - 3) // 2, (k - 2) // 2) * w ** ((k - 2) // 2) * (s - 1)
        return LeadingTerm(k + 1, c, "a3")
    if k == s:
        return LeadingTerm(s, Fraction((-1) ** ((s - 2) // 2) * (n - s) * (s - 1) ** (s - 1), n), "b3")
    if k % 2:
        c = lead * comb((s - 2) // 2, (k - 1) // 2) * w ** ((k - 1) // 2)
        return LeadingTerm(k + 1, c, "b1")
    return LeadingTerm(k, _b2_factor(s, n, k) * w ** ((k - 2) // 2), "b2")


def block_matrix_D(n: int, s: int, r_s, xi) -> SymMatrix:
    """Leading ``(n-s) x (n-s)`` block after all sweeps: a 1, then an
    anti-diagonal of ``-(n-s) r_s xi`` on the remaining rows."""
    m = n - s
    c = -m * as_rational(r_s) * as_rational(xi)
    rows = [[Fraction(0)] * m for _ in range(m)]
    rows[0][0] = Fraction(1)
    for i in range(1, m):
        rows[i][m - i] = c
    return SymMatrix(rows)


def block_matrix_Dbar(n: int, s: int, r_s, xi) -> SymMatrix:
    """Block-diagonal form of :func:`block_matrix_D`: a 1, a lone ``c`` when
    ``n - s`` is even, then 2x2 hyperbolic blocks ``[[0, c], [c, 0]]``."""
    m = n - s
    c = -m * as_rational(r_s) * as_rational(xi)
    rows = [[Fraction(0)] * m for _ in range(m)]
    rows[0][0] = Fraction(1)
    i = 1
    if m % 2 == 0:
        rows[1][1] = c
        i = 2
    while i < m:
        rows[i][i + 1] = rows[i + 1][i] = c
        i += 2
    return SymMatrix(rows)


def block_signature_D(n: int, s: int, r_s, xi) -> Inertia:
    if as_rational(xi) <= 0:
        raise BadSign("xi must be positive")
    if not r_s:
        raise BadSign("r_s must be nonzero")
    return inertia_by_congruence(block_matrix_D(n, s, r_s, xi))


def expected_block_signature(n: int, s: int, r_s) -> int:
    if (n - s) % 2:
        return 1
    return 0 if r_s > 0 else 2


@dataclass(frozen=True)
class BbarSignatureReport:
    xi: Fraction
    signature_B: int
    signature_Bbar: int
    real_roots_g: int

    @property
    def ok(self) -> bool:
        return self.signature_B == self.signature_Bbar == self.real_roots_g

    def to_json(self) -> dict:
        return {
            "xi": format_rational(self.xi),
            "signature_B": self.signature_B,
            "signature_Bbar": self.signature_Bbar,
            "real_roots_g": self.real_roots_g,
            "ok": self.ok,
        }


def bbar_signature_check(spec: FamilySpec, xi) -> BbarSignatureReport:
    """Signatures of ``xi^2 B`` and ``xi^2 Bbar`` against the root count of g."""
    xi = as_rational(xi)
    if not xi:
        raise ZeroXi("xi must be nonzero")
    sq = xi * xi
    B = bezout_of(spec.g, spec.s).scale(sq)
    Bb = bbar_matrix(spec).scale(sq)
    return BbarSignatureReport(
        xi,
        inertia_by_congruence(B).signature,
        inertia_by_congruence(Bb).signature,
        count_real_roots(spec.g),
    )


def expected_bezout_pattern(spec: FamilySpec, t) -> Matrix:
    """``A(t)`` assembled entry by entry from its closed-form description.

    ``t`` may be a rational or the polynomial ``t`` itself.
    """
    n, s, r = spec.n, spec.s, spec.r
    zero = t * 0
    a = [[zero] * n for _ in range(n)]
    a[0][0] = a[0][0] + n
    for k in range(s + 1):
        lk = n - s + k + 2
        if k <= s - 1:
            v = (s - k) * r[s - k] * t
            a[0][lk - 2] = a[0][lk - 2] + v
            a[lk - 2][0] = a[lk - 2][0] + v
        for i in range(2, lk - 1):
            j = lk - i
            if 2 <= j <= lk - 2:
                a[i - 1][j - 1] = a[i - 1][j - 1] - (lk - 2) * r[s - k] * t
    B = bezout_of(spec.g, s)
    off = n - s
    for i in range(s):
        for j in range(s):
            if B[i][j]:
                a[off + i][off + j] = a[off + i][off + j] + B[i][j] * t * t
    return Matrix(a)


def first_sweep(A: Matrix) -> tuple[Matrix, Matrix]:
    """Clear row and column 1 of ``A`` against the ``(1, 1)`` pivot.

    Returns ``(S, S^T A S)`` where ``S`` is a product of shears
    ``R(1, j; -a_1j / a_11)``.  Works for rational or polynomial entries as
    long as ``a_11`` is a nonzero rational.
    """
    n = A.order
    piv = A[0][0]
    if isinstance(piv, UniPoly):
        piv = piv[0] if piv.is_constant() else piv
    S = identity(n)
    for j in range(1, n):
        if A[0][j]:
            S = S @ shear_matrix(n, 1, j + 1, -A[0][j] / piv)
    return S, congruence(S, A)


@dataclass(frozen=True)
class SweepReport:
    xi: Fraction
    pattern_ok: bool
    first_row_cleared: bool
    untouched_rows_ok: bool
    inertia_before: Inertia
    inertia_after: Inertia

    @property
    def ok(self) -> bool:
        return self.pattern_ok and self.first_row_cleared and self.untouched_rows_ok and self.inertia_before == self.inertia_after

    def to_json(self) -> dict:
        return {
            "xi": format_rational(self.xi),
            "pattern_ok": self.pattern_ok,
            "first_row_cleared": self.first_row_cleared,
            "untouched_rows_ok": self.untouched_rows_ok,
            "inertia_before": self.inertia_before.to_json(),
            "inertia_after": self.inertia_after.to_json(),
            "ok": self.ok,
        }


def sweep_step_check(spec: FamilySpec, xi) -> SweepReport:
    """First elimination step on ``A(xi)`` and its structural invariants."""
    xi = as_rational(xi)
    if not xi:
        raise ZeroXi("xi must be nonzero")
    n, s = spec.n, spec.s
    A = bezout_of(spec.at(xi), n)
    pattern_ok = A == expected_bezout_pattern(spec, xi)
    _, A1 = first_sweep(A)
    first_row = A1[0][0] == n and all(not A1[0][j] and not A1[j][0] for j in range(1, n))
    # rows 2..n-s have a zero in column 1, so the sweep leaves them alone
    untouched = all(A1[i][j] == A[i][j] for i in range(1, n - s) for j in range(1, n))
    return SweepReport(
        xi,
        pattern_ok,
        first_row,
        untouched,
        inertia_by_congruence(A),
        inertia_by_congruence(A1),
    )


def swept_block_quadratic_part(spec: FamilySpec) -> Matrix:
    """``t^2`` coefficients of the trailing ``s x s`` block of the swept ``A(t)``."""
    A = bezout_of(spec.symbolic(), spec.n)
    _, A1 = first_sweep(A)
    off = spec.n - spec.s
    rows = []
    for i in range(spec.s):
        row = []
        for j in range(spec.s):
            e = A1[off + i][off + j]
            row.append(e[2] if isinstance(e, UniPoly) else Fraction(0))
        rows.append(row)
    return Matrix(rows)
