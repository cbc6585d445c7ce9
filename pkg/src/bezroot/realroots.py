"""Sturm sequences, real root counting and isolation over Q.

All counts are of *distinct* real roots, and intervals are half-open
``(lo, hi]`` to match the sign-variation difference ``V(lo) - V(hi)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ZeroPolynomial
from .exactalg import UniPoly, cauchy_bound, divrem, squarefree_part
from .inertia import sign_variations


@dataclass(frozen=True)
class IsolatingInterval:
    """``(lo, hi]`` holding exactly one distinct root; ``lo == hi`` pins it."""

    lo: Fraction
    hi: Fraction
    exact: bool = False

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def to_json(self) -> dict:
        from .exactalg import format_rational

        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi), "exact": self.exact}


def _require_nonzero(f: UniPoly):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no well-defined root set")


def sturm_sequence(f: UniPoly) -> list[UniPoly]:
    """Signed remainder sequence ``f, f', -rem(f, f'), ...``.

    Stops before the first zero remainder, so for non-squarefree ``f`` the
    last entry is (a scalar multiple of) ``gcd(f, f')``.
    """
    _require_nonzero(f)
    seq = [f, f.derivative()]
    if seq[-1].is_zero():
        return seq[:1]
    while True:
        r = divrem(seq[-2], seq[-1])[1]
        if r.is_zero():
            return seq
        seq.append(-r)


def _variations_at(seq, x) -> int:
    return sign_variations([p(x) for p in seq])


def _variations_at_inf(seq, sign: int) -> int:
    vals = []
    for p in seq:
        lc = p.lc
        if sign < 0 and p.degree % 2:
            lc = -lc
        vals.append(lc)
    return sign_variations(vals)


class _Counter:
    """Sturm chain of the squarefree part, reused across many queries."""

    def __init__(self, f: UniPoly):
        _require_nonzero(f)
        self.f = squarefree_part(f)
        self.seq = sturm_sequence(self.f)

    def variations(self, x) -> int:
        if x is None:
            raise ValueError("use variations_inf for unbounded endpoints")
        return _variations_at(self.seq, x)

    def count(self, lo=None, hi=None) -> int:
        v_lo = _variations_at_inf(self.seq, -1) if lo is None else self.variations(lo)
        v_hi = _variations_at_inf(self.seq, +1) if hi is None else self.variations(hi)
        return v_lo - v_hi


def count_real_roots(f: UniPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    """Distinct real roots of ``f`` in ``(lo, hi]``; ``None`` means unbounded.

    >>> x = UniPoly([0, 1])
    >>> count_real_roots(x**3 - x), count_real_roots(x**3 - x, Fraction(0), None)
    (3, 1)
    >>> count_real_roots((x - 1)**2 * (x**2 + 1))
    1
    """
    return _Counter(f).count(lo, hi)


def _isolate(counter: _Counter) -> list[IsolatingInterval]:
    f = counter.f
    if f.degree < 1:
        return []
    b = cauchy_bound(f)
    out = []
    # splitting at 0 first pins a root at the origin exactly
    v0 = counter.variations(Fraction(0))
    stack = [(-b, Fraction(0), counter.variations(-b), v0), (Fraction(0), b, v0, counter.variations(b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            if f(hi) == 0:
                out.append(IsolatingInterval(hi, hi, True))
            else:
                out.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = counter.variations(mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort(key=lambda iv: iv.hi)
    return out


def _refine(counter: _Counter, iv: IsolatingInterval, width) -> IsolatingInterval:
    f = counter.f
    lo, hi = iv.lo, iv.hi
    if iv.exact:
        return iv
    while hi - lo > width:
        mid = (lo + hi) / 2
        if f(mid) == 0:
            return IsolatingInterval(mid, mid, True)
        if counter.count(lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return IsolatingInterval(lo, hi)


def isolate_real_roots(f: UniPoly, width=None) -> list[IsolatingInterval]:
    """Disjoint isolating intervals, ascending, one per distinct real root.

    With ``width`` given, every non-exact interval is bisected until it is
    no wider than ``width``.
    """
    counter = _Counter(f)
    ivs = _isolate(counter)
    if width is not None:
        width = Fraction(width)
        ivs = [_refine(counter, iv, width) for iv in ivs]
    return ivs


def refine_root(f: UniPoly, iv: IsolatingInterval, width) -> IsolatingInterval:
    return _refine(_Counter(f), iv, Fraction(width))


def _max_root_bound(counter: _Counter) -> Optional[Fraction]:
    ivs = _isolate(counter)
    if not ivs:
        return None
    top = _refine(counter, ivs[-1], Fraction(1))
    if top.exact:
        return top.hi + 1
    return top.hi


def strict_upper_rational(f: UniPoly, mode: str = "max_root") -> Fraction:
    """A rational strictly above the largest real root of ``f``.

    ``mode="max_abs_root"`` bounds the largest absolute value of a real root
    instead.  With no real roots at all the result is 0.
    """
    _require_nonzero(f)
    if mode not in ("max_root", "max_abs_root"):
        raise ValueError(f"unknown mode {mode!r}")
    upper = _max_root_bound(_Counter(f))
    if mode == "max_root":
        return Fraction(0) if upper is None else upper
    lower = _max_root_bound(_Counter(f.mirror()))
    cands = [b for b in (upper, lower) if b is not None]
    return max(cands) if cands else Fraction(0)


def largest_root_interval(f: UniPoly) -> Optional[IsolatingInterval]:
    ivs = isolate_real_roots(f)
    return ivs[-1] if ivs else None


def exceeds_all_roots(f: UniPoly, xi, absolute: bool = False) -> bool:
    """True when ``xi`` is strictly above every real root (or its modulus)."""
    c = _Counter(f)
    if c.f(xi) == 0 or c.count(xi, None) != 0:
        return False
    if absolute:
        if xi <= 0:
            return c.count(None, None) == 0
        return c.count(None, -xi) == 0
    return True
