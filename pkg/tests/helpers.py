"""Random generators and sympy bridges shared by the test modules."""

import random
from fractions import Fraction

import sympy

from bezroot.exactalg import UniPoly
from bezroot.linalg import Matrix

X = sympy.Symbol("x")
T = sympy.Symbol("t")


def rand_q(rng: random.Random, span: int = 9, den: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_poly(rng: random.Random, deg: int, var: str = "x", span: int = 9) -> UniPoly:
    """Exact degree ``deg`` with random rational coefficients."""
    cs = [rand_q(rng, span) for _ in range(deg)]
    lc = Fraction(0)
    while not lc:
        lc = rand_q(rng, span)
    return UniPoly(cs + [lc], var)


def rand_sym(rng: random.Random, n: int, zero_bias: float = 0.3) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(0) if rng.random() < zero_bias else rand_q(rng, 5, 4)
            rows[i][j] = rows[j][i] = v
    return Matrix(rows)


def rand_low_rank_sym(rng: random.Random, n: int, k: int) -> Matrix:
    """``V D V^T`` with ``V`` n-by-k: rank at most ``k``, often singular."""
    V = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(n)]
    d = [Fraction(rng.choice([-2, -1, 1, 2])) for _ in range(k)]
    rows = [[sum(V[i][a] * d[a] * V[j][a] for a in range(k)) for j in range(n)] for i in range(n)]
    return Matrix(rows)


def rand_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        M = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        if to_sympy_matrix(M).det() != 0:
            return M


def sym_q(q) -> sympy.Rational:
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def to_sympy(p: UniPoly, sym=X):
    """Rational ``UniPoly`` (or one over Q[t]) as a sympy expression."""
    expr = sympy.Integer(0)
    for k, c in enumerate(p.coeffs):
        cc = to_sympy(c, T) if isinstance(c, UniPoly) else sym_q(c)
        expr += cc * sym**k
    return sympy.expand(expr)


def from_sympy(expr, sym=X, var="x") -> UniPoly:
    P = sympy.Poly(expr, sym)
    cs = list(reversed(P.all_coeffs()))
    return UniPoly([Fraction(int(c.p), int(c.q)) for c in cs], var)


def to_sympy_matrix(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(e, T) if isinstance(e, UniPoly) else sym_q(e) for e in r] for r in M.rows()])
