import random
from fractions import Fraction

import pytest

from bezroot.errors import BadSign, OutOfRange, ZeroXi
from bezroot.exactalg import UniPoly
from bezroot.family import FamilySpec, build_family, random_spec
from bezroot.inertia import charpoly, inertia_by_congruence
from bezroot.linalg import Matrix
from bezroot.structure import (
    b2_factor_unsimplified,
    _b2_factor,
    bbar_from_coeffs,
    bbar_matrix,
    block_matrix_D,
    block_matrix_Dbar,
    block_signature_D,
    expected_block_signature,
    first_sweep,
    leading_term_h,
    bbar_signature_check,
    phi_charpoly_u,
    sweep_step_check,
    swept_block_quadratic_part,
    u_coefficients,
)
from bezroot.worked_examples import s2_formula

x = UniPoly([0, 1])
t1 = UniPoly([0, 1], "t1")


def test_bbar_examples():
    assert bbar_from_coeffs([1, 1], 2) == Matrix([[Fraction(1, 2)]])
    n = 4
    assert bbar_from_coeffs([1, 1, 1], n) == Matrix([[1, Fraction(1, 2)], [Fraction(1, 2), Fraction(-5, 4)]])


def test_bbar_first_row():
    rng = random.Random(3)
    for _ in range(30):
        s = rng.randint(1, 5)
        n = s + rng.randint(1, 4)
        r = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(s)] + [Fraction(rng.choice([-3, 1, 2]))]
        B = bbar_from_coeffs(r, n)
        for j in range(1, s + 1):
            assert B[0][j - 1] == (s - j + 1) * (1 - Fraction(s, n)) * r[s] * r[s - j + 1]


def test_bbar_is_swept_block():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(2, 7)
        spec = random_spec(rng, n, rng.randint(1, n - 1))
        assert swept_block_quadratic_part(spec) == bbar_matrix(spec)


def test_phi_s2_formula():
    for n in range(3, 10):
        assert phi_charpoly_u(2, n) == s2_formula(n)


def test_phi_constants():
    assert phi_charpoly_u(7, 10)[0] == Fraction(69984, 5) * t1**7 + Fraction(2470629, 10)
    assert phi_charpoly_u(8, 12)[0] == Fraction(-823543, 3) * t1**8 + Fraction(16777216, 3)


def test_phi_specialises_to_charpoly():
    for s, n in [(3, 5), (4, 6), (5, 7)]:
        phi = phi_charpoly_u(s, n)
        for a in (Fraction(-2), Fraction(1, 3), Fraction(5)):
            spec_r = [c(a) if isinstance(c, UniPoly) else c for c in u_coefficients(s)]
            want = charpoly(bbar_from_coeffs(spec_r, n))
            got = UniPoly([c(a) if isinstance(c, UniPoly) else c for c in phi.coeffs])
            assert got == want


def test_phi_range():
    with pytest.raises(OutOfRange):
        phi_charpoly_u(3, 3)
    with pytest.raises(OutOfRange):
        phi_charpoly_u(0, 3)


def test_leading_term_examples():
    lt = leading_term_h(7, 10, 7)
    assert (lt.case, lt.degree, lt.coefficient) == ("a2", 7, Fraction(69984, 5))
    lt = leading_term_h(8, 12, 8)
    assert (lt.case, lt.degree, lt.coefficient) == ("b3", 8, Fraction(-823543, 3))
    with pytest.raises(OutOfRange):
        leading_term_h(2, 5, 1)
    with pytest.raises(OutOfRange):
        leading_term_h(5, 7, 6)


def _lead(c):
    if not isinstance(c, UniPoly):
        return 0, c
    return c.degree, c.lc


@pytest.mark.parametrize("s", range(3, 10))
def test_leading_terms_match_charpoly(s):
    for n in range(s + 1, s + 5):
        phi = phi_charpoly_u(s, n)
        for k in range(1, s + 1):
            lt = leading_term_h(s, n, k)
            assert lt.coefficient != 0 and lt.degree >= 1
            assert _lead(phi[s - k]) == (lt.degree, lt.coefficient), (s, n, k, lt.case)


def test_b2_closed_form_matches_sum():
    for s in range(4, 14, 2):
        for n in range(s + 1, s + 6):
            for k in range(2, s, 2):
                assert _b2_factor(s, n, k) == b2_factor_unsimplified(s, n, k)


def test_block_signature_table():
    for m in range(1, 9):
        for r_s in (1, -1, Fraction(3, 7), Fraction(-5, 2)):
            for xi in (Fraction(1, 3), 1, 50):
                sig = block_signature_D(m + 2, 2, r_s, xi).signature
                assert sig == expected_block_signature(m + 2, 2, r_s)
                want = 1 if m % 2 else (0 if r_s > 0 else 2)
                assert sig == want
                D, Db = block_matrix_D(m + 2, 2, r_s, xi), block_matrix_Dbar(m + 2, 2, r_s, xi)
                assert inertia_by_congruence(D) == inertia_by_congruence(Db)


def test_block_signature_errors():
    with pytest.raises(BadSign):
        block_signature_D(4, 2, 1, 0)
    with pytest.raises(BadSign):
        block_signature_D(4, 2, 1, -1)
    with pytest.raises(BadSign):
        block_signature_D(4, 2, 0, 1)


def test_bbar_signature_examples():
    rep = bbar_signature_check(build_family(4, x**2 - 1), 1)
    assert rep.ok and rep.signature_B == 2
    rep = bbar_signature_check(build_family(4, x**2 + 1), 3)
    assert rep.ok and rep.signature_B == 0
    a = bbar_signature_check(build_family(5, x**3 - x), -2)
    b = bbar_signature_check(build_family(5, x**3 - x), 2)
    assert a.ok and a.signature_B == 3 and b.signature_Bbar == a.signature_Bbar
    with pytest.raises(ZeroXi):
        bbar_signature_check(build_family(4, x**2 + 1), 0)


def test_bbar_signature_random():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 8)
        spec = random_spec(rng, n, rng.randint(1, n - 1))
        xi = Fraction(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 5))
        assert bbar_signature_check(spec, xi).ok


def test_sweep_step():
    rng = random.Random(19)
    for _ in range(40):
        n = rng.randint(2, 8)
        spec = random_spec(rng, n, rng.randint(1, n - 1))
        rep = sweep_step_check(spec, 2)
        assert rep.ok
        assert rep.inertia_before == rep.inertia_after
    with pytest.raises(ZeroXi):
        sweep_step_check(build_family(4, x**2 + 1), 0)


def test_first_row_before_sweep():
    from bezroot.bezout import bezout_of

    spec = FamilySpec(6, (Fraction(2), Fraction(-1, 2), Fraction(3), Fraction(5)))
    xi = Fraction(7, 3)
    A = bezout_of(spec.at(xi), spec.n)
    n, s, r = spec.n, spec.s, spec.r
    for k in range(s):
        lk = n - s + k + 2
        assert A[0][lk - 2] == (s - k) * r[s - k] * xi
    S, A1 = first_sweep(A)
    assert A1[0][0] == n and all(A1[0][j] == 0 for j in range(1, n))
