"""The family ``f_r(t; x) = x^n + t*g_r(x)`` and its real-root count.

For ``xi`` beyond the largest real root of ``P_r(t) = det M_n(f_r(t; x))``
the number of distinct real roots of ``f_r(xi; x)`` is

* ``gamma + 1`` when ``n - s`` is odd,
* ``gamma`` when ``n - s`` is even and ``r_s > 0``,
* ``gamma + 2`` when ``n - s`` is even and ``r_s < 0``,

where ``s = deg g_r`` and ``gamma`` counts the real roots of ``g_r``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .bezout import bezout_of
from .errors import (
    BadLeadingSign,
    BadParity,
    DegenerateFamily,
    DegreeOrder,
    IdenticallyZero,
    NotSeparable,
    NotTotallyComplex,
    ThresholdViolation,
)
from .exactalg import UniPoly, as_rational, format_rational, poly_to_json
from .inertia import inertia_by_congruence
from .linalg import det
from .realroots import (
    IsolatingInterval,
    count_real_roots,
    exceeds_all_roots,
    largest_root_interval,
    refine_root,
    strict_upper_rational,
)
from .resdisc import disc_in_t, discriminant, family_polynomial

THRESHOLD_MODES = ("max_root", "max_abs_root")


@dataclass(frozen=True)
class FamilySpec:
    n: int
    r: tuple

    def __post_init__(self):
        r = tuple(as_rational(c) for c in self.r)
        while r and not r[-1]:
            r = r[:-1]
        object.__setattr__(self, "r", r)
        if not r:
            raise DegenerateFamily("g must be a nonzero polynomial")
        s = len(r) - 1
        if s < 1:
            raise DegreeOrder(f"g must have degree >= 1, got {s}")
        if self.n <= s:
            raise DegreeOrder(f"need n > deg g, got n={self.n}, deg g={s}")
        if s >= 2 and not discriminant(self.g):
            raise NotSeparable(f"g = {self.g} has a repeated root")

    @property
    def s(self) -> int:
        return len(self.r) - 1

    @property
    def r_s(self) -> Fraction:
        return self.r[-1]

    @property
    def g(self) -> UniPoly:
        return UniPoly(self.r, "x")

    @cached_property
    def gamma(self) -> int:
        return count_real_roots(self.g)

    def symbolic(self) -> UniPoly:
        """``f_r(t; x)`` over ``Q[t]``."""
        return family_polynomial(self.n, self.g)

    def at(self, xi) -> UniPoly:
        """``f_r(xi; x) = x^n + xi*g_r(x)`` over Q."""
        xi = as_rational(xi)
        coeffs = [xi * c for c in self.r] + [Fraction(0)] * (self.n - self.s)
        coeffs[self.n] += 1
        return UniPoly(coeffs, "x")

    def to_json(self) -> dict:
        return {"n": self.n, "s": self.s, "g": poly_to_json(self.g), "gamma": self.gamma}


def build_family(n: int, g: UniPoly) -> FamilySpec:
    return FamilySpec(n, tuple(g.coeffs))


def p_of_t(spec: FamilySpec) -> UniPoly:
    """``P_r(t) = det M_n(f_r(t; x))`` as a polynomial in ``t``."""
    d = det(bezout_of(spec.symbolic(), spec.n))
    if not isinstance(d, UniPoly):
        d = UniPoly((d,), "t")
    return d


@dataclass(frozen=True)
class AlphaR:
    alpha_interval: IsolatingInterval
    witness_above: Fraction
    p: UniPoly = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "alpha_interval": self.alpha_interval.to_json(),
            "witness_above": format_rational(self.witness_above),
            "p_of_t": poly_to_json(self.p),
        }


def alpha_r(spec: FamilySpec) -> AlphaR:
    """Largest real root of ``P_r`` and a rational strictly above it."""
    p = p_of_t(spec)
    if p.is_zero():
        raise IdenticallyZero(f"P_r(t) vanishes identically for {spec}")
    top = largest_root_interval(p)
    w = strict_upper_rational(p, "max_root")
    # narrow the reported interval until it sits strictly below the witness
    while not top.exact and top.hi >= w:
        top = refine_root(p, top, top.width / 2)
    return AlphaR(top, w, p)


@dataclass(frozen=True)
class Prediction:
    gamma: int
    parity: str
    sign_rs: str
    predicted_count: int
    threshold: Fraction
    threshold_mode: str
    threshold_poly: UniPoly = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "parity": self.parity,
            "sign_rs": self.sign_rs,
            "predicted": self.predicted_count,
            "threshold": format_rational(self.threshold),
            "threshold_mode": self.threshold_mode,
        }


def predicted_count(gamma: int, n: int, s: int, r_s) -> int:
    if (n - s) % 2:
        return gamma + 1
    return gamma if r_s > 0 else gamma + 2


def threshold_polynomial(spec: FamilySpec, mode: str) -> UniPoly:
    if mode == "max_root":
        return p_of_t(spec)
    if mode == "max_abs_root":
        return disc_in_t(spec).full
    raise ValueError(f"unknown threshold mode {mode!r}")


def predict(spec: FamilySpec, threshold_mode: str = "max_abs_root") -> Prediction:
    """Predicted real-root count together with a rational threshold.

    ``max_root`` bounds the largest real root of ``P_r``; ``max_abs_root``
    (the default, and the stricter) bounds the largest absolute value of a
    real root of the discriminant in ``t``.  Both root sets contain 0, so the
    threshold is always positive.
    """
    tp = threshold_polynomial(spec, threshold_mode)
    if tp.is_zero():
        raise IdenticallyZero(f"threshold polynomial vanishes identically for {spec}")
    thr = strict_upper_rational(tp, threshold_mode)
    return Prediction(
        gamma=spec.gamma,
        parity="odd" if (spec.n - spec.s) % 2 else "even",
        sign_rs="positive" if spec.r_s > 0 else "negative",
        predicted_count=predicted_count(spec.gamma, spec.n, spec.s, spec.r_s),
        threshold=thr,
        threshold_mode=threshold_mode,
        threshold_poly=tp,
    )


@dataclass(frozen=True)
class XiCheck:
    xi: Fraction
    sturm: int
    bezout_signature: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.sturm == self.bezout_signature == self.predicted

    def to_json(self) -> dict:
        return {
            "xi": format_rational(self.xi),
            "sturm": self.sturm,
            "bezout_signature": self.bezout_signature,
            "predicted": self.predicted,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class VerifyReport:
    spec: FamilySpec
    prediction: Prediction
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "prediction": self.prediction.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }


def count_both_ways(f: UniPoly) -> tuple[int, int]:
    """Distinct real roots by Sturm and by the Bezoutian signature."""
    return count_real_roots(f), inertia_by_congruence(bezout_of(f)).signature


def verify_prediction(
    spec: FamilySpec,
    xis: Sequence,
    threshold_mode: str = "max_abs_root",
    prediction: Optional[Prediction] = None,
) -> VerifyReport:
    """Count real roots of ``f_r(xi; x)`` for each ``xi`` two ways.

    Every ``xi`` must lie strictly beyond the threshold root set; this is
    decided exactly with a Sturm count, not against the rational witness.
    """
    pred = prediction or predict(spec, threshold_mode)
    absolute = pred.threshold_mode == "max_abs_root"
    checks = []
    for xi in xis:
        xi = as_rational(xi)
        if not exceeds_all_roots(pred.threshold_poly, xi, absolute=absolute):
            raise ThresholdViolation(f"xi={format_rational(xi)} is not beyond the {pred.threshold_mode} threshold")
        sturm, sig = count_both_ways(spec.at(xi))
        checks.append(XiCheck(xi, sturm, sig, pred.predicted_count))
    return VerifyReport(spec, pred, tuple(checks))


@dataclass(frozen=True)
class TotallyComplex:
    beta: Fraction
    f: UniPoly
    sturm: int
    bezout_signature: int

    @property
    def ok(self) -> bool:
        return self.sturm == 0 and self.bezout_signature == 0

    def to_json(self) -> dict:
        return {
            "beta": format_rational(self.beta),
            "f": poly_to_json(self.f),
            "certificate": {"sturm": self.sturm, "bezout_signature": self.bezout_signature, "ok": self.ok},
        }


def totally_complex_construct(n: int, g: UniPoly) -> TotallyComplex:
    """Pick ``beta`` with ``x^n + beta*g(x)`` free of real roots.

    Requires ``g`` separable with no real roots, ``n - deg g`` even and a
    positive leading coefficient.
    """
    spec = build_family(n, g)
    if spec.gamma:
        raise NotTotallyComplex(f"g has {spec.gamma} real root(s)")
    if (n - spec.s) % 2:
        raise BadParity(f"n - deg g = {n - spec.s} is odd")
    if spec.r_s < 0:
        raise BadLeadingSign("the leading coefficient of g must be positive")
    beta = strict_upper_rational(disc_in_t(spec).full, "max_root")
    f = spec.at(beta)
    sturm, sig = count_both_ways(f)
    return TotallyComplex(beta, f, sturm, sig)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_spec(rng: random.Random, n: int, s: int, max_tries: int = 1000) -> FamilySpec:
    """Rejection-sample a separable ``g`` of exact degree ``s``."""
    for _ in range(max_tries):
        r = [random_rational(rng) for _ in range(s + 1)]
        if not r[-1]:
            continue
        try:
            return FamilySpec(n, tuple(r))
        except NotSeparable:
            continue
    raise RuntimeError(f"no separable g of degree {s} found in {max_tries} draws")


def random_totally_complex(rng: random.Random, s: int) -> UniPoly:
    """Product of ``s/2`` random monic quadratics with negative discriminant,
    scaled by a positive rational; rejected until separable."""
    if s % 2 or s < 2:
        raise ValueError("a totally complex polynomial has even positive degree")
    while True:
        g = UniPoly([as_rational(rng.randint(1, 9)) / rng.randint(1, 9)], "x")
        for _ in range(s // 2):
            while True:
                b, c = random_rational(rng), random_rational(rng)
                if b * b - 4 * c < 0:
                    break
            g = g * UniPoly([c, b, 1], "x")
        if discriminant(g):
            return g
