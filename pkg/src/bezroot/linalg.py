"""Square matrices over Q or Q[t], fraction-free determinant and rank."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotSquare, NotSymmetric, ParseError
from .exactalg import UniPoly, element_from_json, element_to_json, exquo


class Matrix:
    """Immutable square matrix; entries are rationals or polynomials."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(_norm(e) for e in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise NotSquare(f"expected a square matrix, got row lengths {[len(r) for r in rows]}")
        object.__setattr__(self, "entries", rows)
        self._validate()

    def _validate(self):
        pass

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.entries[i][j]
        return self.entries[idx]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.entries]!r})"

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]

    def is_symmetric(self) -> bool:
        n = self.order
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i + 1, n))

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self.entries)))

    T = property(transpose)

    def __matmul__(self, other: Matrix) -> Matrix:
        n = self.order
        b = other.entries
        out = []
        for i in range(n):
            row = self.entries[i]
            out.append([_dot(row, [b[k][j] for k in range(n)]) for j in range(n)])
        return Matrix(out)

    def __add__(self, other: Matrix):
        return type(self)._like(self, [[a + b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __sub__(self, other: Matrix):
        return type(self)._like(self, [[a - b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __neg__(self):
        return type(self)._like(self, [[-a for a in r] for r in self])

    def scale(self, c):
        return type(self)._like(self, [[c * a for a in r] for r in self])

    def map(self, fn):
        return type(self)._like(self, [[fn(a) for a in r] for r in self])

    @staticmethod
    def _like(proto, rows):
        return type(proto)(rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix([[self.entries[i][j] for j in cols] for i in rows])

    def to_json(self) -> dict:
        return {"order": self.order, "entries": [[element_to_json(e) for e in r] for r in self.entries]}


class SymMatrix(Matrix):
    """Square matrix asserted symmetric on construction."""

    __slots__ = ()

    def _validate(self):
        if not self.is_symmetric():
            raise NotSymmetric("matrix is not symmetric")

    def submatrix(self, rows, cols):
        m = Matrix.submatrix(self, rows, cols)
        return SymMatrix(m.entries) if list(rows) == list(cols) else m


def matrix_from_json(obj, symmetric: bool = True) -> Matrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError('a matrix must be a JSON object with an "entries" array')
    entries = obj["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ParseError('"entries" must be an array of rows')
    rows = [[element_from_json(e) for e in r] for r in entries]
    if "order" in obj and obj["order"] != len(rows):
        raise ParseError(f'"order" is {obj["order"]} but there are {len(rows)} rows')
    return SymMatrix(rows) if symmetric else Matrix(rows)


def _norm(e):
    if isinstance(e, (UniPoly, Fraction)):
        return e
    if isinstance(e, int) and not isinstance(e, bool):
        return Fraction(e)
    raise TypeError(f"unsupported matrix entry {e!r}")


def _dot(a, b):
    acc = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def identity(n: int) -> Matrix:
    return Matrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])


def zeros(n: int) -> Matrix:
    return Matrix([[Fraction(0)] * n for _ in range(n)])


def anti_identity(n: int) -> Matrix:
    """``J_n``: ones on the anti-diagonal."""
    return Matrix([[Fraction(int(i + j == n - 1)) for j in range(n)] for i in range(n)])


def scaling_matrix(m: int, k: int, c) -> Matrix:
    """Identity with the ``(k, k)`` entry replaced by ``c`` (1-based ``k``)."""
    rows = identity(m).rows()
    rows[k - 1][k - 1] = c
    return Matrix(rows)


def shear_matrix(m: int, k: int, l: int, c) -> Matrix:
    """Identity with ``c`` at ``(k, l)``, ``k != l`` (1-based)."""
    if k == l:
        raise ValueError("shear needs two distinct indices")
    rows = identity(m).rows()
    rows[k - 1][l - 1] = c
    return Matrix(rows)


def congruence(S: Matrix, M: Matrix) -> Matrix:
    """``S^T M S``; the result is symmetric whenever ``M`` is."""
    out = S.transpose() @ M @ S
    if isinstance(M, SymMatrix):
        return SymMatrix(out.entries)
    return out


def _div(a, b):
    if isinstance(b, UniPoly):
        if b.is_constant():
            return a / b.coeffs[0]
        if not isinstance(a, UniPoly):
            a = UniPoly((a,), b.var)
        return exquo(a, b)
    return a / b


def det(M: Matrix):
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate division is exact, so the same code handles rational
    entries and entries in ``Q[t]`` without coefficient swell from fractions
    of polynomials.
    """
    n = M.order
    if n == 0:
        return Fraction(1)
    a = M.rows()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = _div(a[i][j] * akk - aik * a[k][j], prev)
        prev = akk
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def rank(M: Matrix) -> int:
    """Rank by fraction-free elimination with full pivot search."""
    a = M.rows()
    n = M.order
    r = 0
    prev = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(r, n) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, n):
            aic = a[i][col]
            for j in range(n):
                a[i][j] = _div(a[i][j] * p - aic * a[r][j], prev)
        prev = p
        r += 1
    return r
