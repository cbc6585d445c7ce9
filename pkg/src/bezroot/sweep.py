"""Seeded randomized validation of the real-root count over many families."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from .exactalg import format_rational, poly_to_json
from .family import predict, random_spec, verify_prediction
from .resdisc import disc_in_t


def trial_rng(seed: int, n: int, s: int, trial: int) -> random.Random:
    # string seeds hash deterministically, independent of PYTHONHASHSEED
    return random.Random(f"{seed}:{n}:{s}:{trial}")


def run_trial(n: int, s: int, trial: int, seed: int, threshold_mode: str = "max_abs_root") -> dict:
    spec = random_spec(trial_rng(seed, n, s, trial), n, s)
    pred = predict(spec, threshold_mode)
    w = pred.threshold
    report = verify_prediction(spec, [w, w + 1, 1000 * w], prediction=pred)

    # probe just above the largest root of P_r as well; recorded, not gated
    probe = predict(spec, "max_root") if threshold_mode != "max_root" else pred
    probe_report = verify_prediction(spec, [probe.threshold], prediction=probe)

    dt = disc_in_t(spec)
    return {
        "n": n,
        "s": s,
        "trial": trial,
        "g": poly_to_json(spec.g),
        "gamma": spec.gamma,
        "all_real_g": spec.gamma == s,
        "predicted": pred.predicted_count,
        "threshold": format_rational(w),
        "counts": [c.to_json() for c in report.checks],
        "ok": report.ok,
        "max_root_probe": {
            "threshold": format_rational(probe.threshold),
            "ok": probe_report.ok,
        },
        "disc_t_power": dt.t_power,
        "disc_t_expected_power": dt.expected_power,
    }


def _run_packed(args):
    return run_trial(*args)


def default_workers() -> int:
    env = os.environ.get("BEZROOT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep_harness(
    n_values: Iterable[int],
    s_values: Optional[Iterable[int]] = None,
    trials: int = 20,
    seed: int = 42,
    threshold_mode: str = "max_abs_root",
    workers: int = 1,
) -> dict:
    """Run every ``(n, s, trial)`` and aggregate pass/fail counts.

    ``s_values=None`` means every ``1 <= s < n``.  The report depends only on
    the arguments, never on ``workers``.
    """
    n_values = list(n_values)
    if not n_values:
        raise ValueError("n range is empty")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    jobs = []
    for n in n_values:
        ss = range(1, n) if s_values is None else [s for s in s_values if 1 <= s < n]
        for s in ss:
            for k in range(trials):
                jobs.append((n, s, k, seed, threshold_mode))
    if not jobs:
        raise ValueError("no (n, s) pair satisfies 1 <= s < n")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_packed, jobs, chunksize=4))
    else:
        results = [_run_packed(j) for j in jobs]
    results.sort(key=lambda r: (r["n"], r["s"], r["trial"]))

    cases = {}
    for r in results:
        key = f"{r['n']},{r['s']}"
        c = cases.setdefault(key, {"n": r["n"], "s": r["s"], "passed": 0, "failed": 0})
        c["passed" if r["ok"] else "failed"] += 1
    powers = [(r["disc_t_power"], r["disc_t_expected_power"]) for r in results]
    return {
        "seed": seed,
        "trials": trials,
        "threshold_mode": threshold_mode,
        "total": len(results),
        "passed": sum(r["ok"] for r in results),
        "failed": sum(not r["ok"] for r in results),
        "cases": list(cases.values()),
        "counterexamples": [r for r in results if not r["ok"]],
        "max_root_probe_failures": [r for r in results if not r["max_root_probe"]["ok"]],
        "disc_t": {
            "all_positive_power": all(p >= 1 for p, _ in powers),
            "matches_expected_power": sum(p == e for p, e in powers),
            "exceeds_expected_power": sum(p > e for p, e in powers),
            "below_expected_power": sum(p < e for p, e in powers),
        },
        "all_real_g_trials": sum(r["all_real_g"] for r in results),
        "results": results,
    }
