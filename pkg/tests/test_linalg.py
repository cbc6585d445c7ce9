import random
from fractions import Fraction

import pytest

from bezroot.errors import NotSquare, NotSymmetric, ParseError
from bezroot.exactalg import UniPoly
from bezroot.linalg import (
    Matrix,
    SymMatrix,
    anti_identity,
    congruence,
    det,
    identity,
    matrix_from_json,
    rank,
    scaling_matrix,
    shear_matrix,
)
from helpers import T, rand_invertible, rand_low_rank_sym, rand_sym, to_sympy, to_sympy_matrix


def test_det_small():
    assert det(Matrix([[1, 2], [3, 4]])) == -2
    assert det(identity(4)) == 1
    assert det(Matrix([[0, 1], [1, 0]])) == -1


def test_det_matches_sympy_rational():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 6)
        M = Matrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        assert det(M) == to_sympy_matrix(M).det()


def test_det_over_polynomial_ring():
    t = UniPoly([0, 1], "t")
    M = Matrix([[2, t], [t, t * t]])
    assert det(M) == t * t
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(2, 4)
        M = Matrix([[UniPoly([rng.randint(-3, 3), rng.randint(-3, 3)], "t") for _ in range(n)] for _ in range(n)])
        got = det(M)
        got = to_sympy(got, T) if isinstance(got, UniPoly) else got
        assert got == to_sympy_matrix(M).det().expand()


def test_rank():
    rng = random.Random(11)
    for _ in range(40):
        n, k = rng.randint(1, 6), rng.randint(0, 4)
        M = rand_low_rank_sym(rng, n, k)
        assert rank(M) == to_sympy_matrix(M).rank()


def test_elementary_matrices():
    assert scaling_matrix(3, 2, 5)[1][1] == 5
    R = shear_matrix(3, 1, 3, 7)
    assert R[0][2] == 7 and det(R) == 1
    J = anti_identity(3)
    assert J @ J == identity(3)


def test_congruence_is_transpose_product():
    rng = random.Random(2)
    A, S = rand_sym(rng, 4), rand_invertible(rng, 4)
    assert congruence(S, A) == S.T @ A @ S


def test_symmetric_validation_and_json():
    with pytest.raises(NotSymmetric):
        SymMatrix([[1, 2], [3, 4]])
    with pytest.raises(NotSquare):
        Matrix([[1, 2]])
    M = SymMatrix([[1, Fraction(1, 2)], [Fraction(1, 2), -3]])
    doc = M.to_json()
    assert doc == {"order": 2, "entries": [["1", "1/2"], ["1/2", "-3"]]}
    assert matrix_from_json(doc) == M
    with pytest.raises(ParseError):
        matrix_from_json({"order": 3, "entries": [["1"]]})
