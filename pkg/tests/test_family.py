import random
from fractions import Fraction

import pytest

from bezroot.errors import (
    BadLeadingSign,
    BadParity,
    DegreeOrder,
    NotSeparable,
    NotTotallyComplex,
    ThresholdViolation,
)
from bezroot.exactalg import UniPoly
from bezroot.family import (
    FamilySpec,
    alpha_r,
    build_family,
    count_both_ways,
    p_of_t,
    predict,
    predicted_count,
    random_spec,
    random_totally_complex,
    totally_complex_construct,
    verify_prediction,
)
from bezroot.realroots import count_real_roots
from bezroot.resdisc import disc_in_t

x = UniPoly([0, 1])
t = UniPoly([0, 1], "t")


def test_build_family_examples():
    assert build_family(4, x**2 + 1).gamma == 0
    assert build_family(3, x**2 - 1).gamma == 2
    with pytest.raises(NotSeparable):
        build_family(3, (x - 1) ** 2)
    with pytest.raises(DegreeOrder):
        build_family(2, x**2 + 1)


def test_p_of_t_examples():
    assert p_of_t(build_family(2, x)) == t**2
    assert p_of_t(build_family(3, x)) == -4 * t**3
    rng = random.Random(5)
    for _ in range(20):
        spec = random_spec(rng, rng.randint(2, 6), 1)
        assert p_of_t(spec)(0) == 0


def test_alpha_r():
    a = alpha_r(build_family(2, x))
    assert a.alpha_interval.exact and a.alpha_interval.hi == 0
    assert a.witness_above == 1
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(2, 6)
        a = alpha_r(random_spec(rng, n, rng.randint(1, n - 1)))
        assert a.witness_above > a.alpha_interval.hi
        assert a.alpha_interval.hi >= 0  # P_r(0) = 0, so the top root is >= 0


@pytest.mark.parametrize(
    "n,g,want",
    [(5, x**2 + 1, 1), (4, x**2 + 1, 0), (4, -(x**2) - 1, 2), (3, x, 1)],
)
def test_predict_examples(n, g, want):
    for mode in ("max_root", "max_abs_root"):
        pred = predict(build_family(n, g), mode)
        assert pred.predicted_count == want and pred.threshold > 0


def test_predicted_count_table():
    assert predicted_count(2, 5, 2, 1) == 3
    assert predicted_count(2, 6, 2, 1) == 2
    assert predicted_count(2, 6, 2, -1) == 4


def test_verify_examples():
    rep = verify_prediction(build_family(4, x**2 + 1), [10])
    assert rep.ok and rep.checks[0].sturm == 0
    rep = verify_prediction(build_family(5, x**2 + 1), [7])
    assert rep.ok and rep.checks[0].sturm == 1
    rep = verify_prediction(build_family(3, x), [1], threshold_mode="max_root")
    assert rep.ok and rep.checks[0].sturm == 1


def test_verify_rejects_xi_below_threshold():
    spec = build_family(4, x**2 + 1)
    with pytest.raises(ThresholdViolation):
        verify_prediction(spec, [1])
    with pytest.raises(ThresholdViolation):
        verify_prediction(spec, [0])


def test_all_real_seed_reduces_to_s_counts():
    # g with s distinct real roots: the count is s+1, s or s+2
    g = UniPoly.from_roots([-2, Fraction(1, 3), 1])
    for n, sign, want in [(4, 1, 4), (5, 1, 3), (5, -1, 5)]:
        spec = build_family(n, sign * g)
        rep = verify_prediction(spec, [predict(spec).threshold * 2])
        assert rep.ok and rep.prediction.predicted_count == want


def test_thresholds_order():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(2, 7)
        spec = random_spec(rng, n, rng.randint(1, n - 1))
        mr, ma = predict(spec, "max_root").threshold, predict(spec, "max_abs_root").threshold
        assert mr == alpha_r(spec).witness_above > alpha_r(spec).alpha_interval.hi
        assert ma > 0 and mr > 0


def test_random_spec_is_deterministic_and_valid():
    a = random_spec(random.Random("s"), 6, 3)
    b = random_spec(random.Random("s"), 6, 3)
    assert a == b and a.s == 3 and a.r_s != 0


def test_totally_complex_examples():
    tc = totally_complex_construct(4, x**2 + 1)
    assert tc.ok and tc.beta > 0
    assert tc.f == x**4 + tc.beta * x**2 + tc.beta
    assert totally_complex_construct(6, x**4 + x**2 + 1).ok
    with pytest.raises(BadParity):
        totally_complex_construct(5, x**2 + 1)
    with pytest.raises(NotTotallyComplex):
        totally_complex_construct(4, x**2 - 1)
    with pytest.raises(BadLeadingSign):
        totally_complex_construct(4, -(x**2) - 1)


def test_totally_complex_random():
    rng = random.Random(17)
    for _ in range(30):
        s = rng.choice([2, 4])
        g = random_totally_complex(rng, s)
        assert count_real_roots(g) == 0
        tc = totally_complex_construct(s + 2 * rng.randint(1, 2), g)
        assert tc.ok
        assert count_both_ways(tc.f) == (0, 0)


def test_spec_json():
    spec = build_family(4, x**2 + 1)
    assert spec.to_json() == {"n": 4, "s": 2, "g": ["1", "0", "1"], "gamma": 0}
    assert disc_in_t(spec).t_power >= 1
