import random
from fractions import Fraction

import pytest
import sympy

from bezroot.bezout import bezout_of
from bezroot.errors import NotSymmetric
from bezroot.exactalg import UniPoly
from bezroot.inertia import Inertia, charpoly, inertia_by_charpoly, inertia_by_congruence, sign_variations
from bezroot.linalg import Matrix, congruence, identity, rank, zeros
from helpers import X, rand_invertible, rand_low_rank_sym, rand_sym, to_sympy, to_sympy_matrix

x = UniPoly([0, 1])


def diag(*d):
    n = len(d)
    return Matrix([[d[i] if i == j else 0 for j in range(n)] for i in range(n)])


@pytest.mark.parametrize(
    "M,want",
    [
        (diag(1, -2, 0), Inertia(1, 1, 1)),
        (Matrix([[0, 1], [1, 0]]), Inertia(1, 1, 0)),
        (bezout_of(x**2 - 1), Inertia(2, 0, 0)),
        (diag(3, -1), Inertia(1, 1, 0)),
        (diag(0, 0, 5), Inertia(1, 0, 2)),
        (zeros(3), Inertia(0, 0, 3)),
    ],
)
def test_examples_both_methods(M, want):
    assert inertia_by_congruence(M) == want
    assert inertia_by_charpoly(M) == want


def test_charpoly_examples():
    assert charpoly(identity(2)) == x**2 - 2 * x + 1
    assert charpoly(zeros(3)) == x**3
    assert charpoly(Matrix([[0, 1], [1, 0]])) == x**2 - 1


def test_charpoly_matches_sympy():
    rng = random.Random(41)
    lam = sympy.Symbol("lam")
    for _ in range(60):
        n = rng.randint(1, 6)
        M = Matrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        want = to_sympy_matrix(M).charpoly(lam).as_expr().subs(lam, X)
        assert to_sympy(charpoly(M)) == sympy.expand(want)


def test_rejects_nonsymmetric():
    M = Matrix([[1, 2], [0, 1]])
    with pytest.raises(NotSymmetric):
        inertia_by_congruence(M)
    with pytest.raises(NotSymmetric):
        inertia_by_charpoly(M)


def eigen_inertia(M):
    """Oracle: signs of sympy's exact real eigenvalues."""
    ev = to_sympy_matrix(M).charpoly().all_roots()
    pos = sum(1 for e in ev if e > 0)
    neg = sum(1 for e in ev if e < 0)
    return Inertia(pos, neg, len(ev) - pos - neg)


def test_against_eigenvalue_oracle():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 5)
        M = rand_sym(rng, n) if rng.random() < 0.5 else rand_low_rank_sym(rng, n, rng.randint(0, n))
        assert inertia_by_congruence(M) == eigen_inertia(M)


def test_cross_validation_1000():
    rng = random.Random(47)
    for i in range(1000):
        n = rng.randint(1, 8)
        if i % 3 == 0:
            M = rand_low_rank_sym(rng, n, rng.randint(0, n))
        else:
            M = rand_sym(rng, n, zero_bias=rng.choice([0.0, 0.3, 0.7]))
        a = inertia_by_congruence(M)
        assert a == inertia_by_charpoly(M)
        assert a.order == n
        assert a.rank == rank(M)


def test_sylvester_law():
    rng = random.Random(53)
    for _ in range(150):
        n = rng.randint(1, 6)
        A = rand_sym(rng, n, zero_bias=0.5)
        S = rand_invertible(rng, n)
        assert inertia_by_congruence(congruence(S, A)) == inertia_by_congruence(A)


def test_positive_scaling_invariance():
    rng = random.Random(59)
    for _ in range(50):
        A = rand_sym(rng, rng.randint(1, 6))
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert inertia_by_congruence(A.scale(c)) == inertia_by_congruence(A)
        i = inertia_by_congruence(A)
        assert inertia_by_congruence(A.scale(-c)) == Inertia(i.neg, i.pos, i.zero)


def test_sign_variations():
    assert sign_variations([1, -1, 1]) == 2
    assert sign_variations([1, 0, 0, -3]) == 1
    assert sign_variations([]) == 0


def test_inertia_json():
    assert Inertia(2, 1, 0).to_json() == {"pos": 2, "neg": 1, "zero": 0, "signature": 1}
