"""Inertia of symmetric rational matrices, computed two independent ways.

``inertia_by_congruence`` diagonalizes by simultaneous row/column
elimination.  ``inertia_by_charpoly`` reads the inertia off the
characteristic polynomial with Descartes' rule of signs, which is exact here
because a real symmetric matrix has only real eigenvalues.  Never feed the
second one a non-symmetric matrix; it refuses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSymmetric
from .exactalg import UniPoly
from .linalg import Matrix


@dataclass(frozen=True)
class Inertia:
    pos: int
    neg: int
    zero: int

    @property
    def signature(self) -> int:
        return self.pos - self.neg

    @property
    def order(self) -> int:
        return self.pos + self.neg + self.zero

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def to_json(self) -> dict:
        return {"pos": self.pos, "neg": self.neg, "zero": self.zero, "signature": self.signature}


def _rational_rows(M: Matrix) -> list[list[Fraction]]:
    rows = []
    for r in M:
        row = []
        for e in r:
            if isinstance(e, UniPoly):
                if not e.is_constant():
                    raise TypeError("inertia needs rational entries; evaluate symbolic entries first")
                e = e[0]
            row.append(e)
        rows.append(row)
    return rows


def _check_symmetric(M: Matrix):
    if not M.is_symmetric():
        raise NotSymmetric("inertia is only defined here for symmetric matrices")


def inertia_by_congruence(M: Matrix) -> Inertia:
    _check_symmetric(M)
    a = _rational_rows(M)
    n = len(a)
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j, col_i += col_j: the new (i, i) entry is 2*a_ij
            for c in range(k, n):
                a[i][c] += a[j][c]
            for r in range(k, n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rk = a[k]
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                ri = a[i]
                for j in range(k + 1, n):
                    if rk[j]:
                        ri[j] -= f * rk[j]
        k += 1
    return Inertia(pos, neg, n - pos - neg)


def charpoly(M: Matrix, var: str = "x") -> UniPoly:
    """Monic ``det(var*I - M)`` by Berkowitz's division-free algorithm.

    Only ring operations are used, so entries may be polynomials.
    """
    a = M.entries
    n = len(a)
    p = [Fraction(1)]  # highest degree first
    for r in range(n):
        row = a[r][:r]
        v = [a[i][r] for i in range(r)]
        t = [Fraction(1), -a[r][r]]
        for _ in range(r):
            t.append(-_dot(row, v))
            v = [_dot(a[i][:r], v) for i in range(r)]
        q = []
        for i in range(r + 2):
            acc = Fraction(0)
            for j in range(max(0, i - len(t) + 1), min(i, r) + 1):
                if t[i - j] and p[j]:
                    acc = acc + t[i - j] * p[j]
            q.append(acc)
        p = q
    return UniPoly(list(reversed(p)), var)


def _dot(a, b):
    acc = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def sign_variations(seq) -> int:
    signs = [1 if c > 0 else -1 for c in seq if c]
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def inertia_by_charpoly(M: Matrix) -> Inertia:
    _check_symmetric(M)
    rows = _rational_rows(M)
    cp = charpoly(Matrix(rows))
    zero = cp.trailing_power()
    pos = sign_variations(cp.coeffs[zero:])
    return Inertia(pos, M.order - pos - zero, zero)


def inertia(M: Matrix) -> Inertia:
    return inertia_by_congruence(M)


def signature(M: Matrix) -> int:
    return inertia_by_congruence(M).signature
