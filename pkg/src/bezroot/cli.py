"""Command line front end; every verb prints one JSON document.

Exit status: 0 when everything checked holds, 1 when an assertion fails
(the JSON then carries the counterexample), 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from .bezout import bezout_matrix, bezout_of
from .errors import BezrootError, ParseError, ThresholdViolation
from .exactalg import format_rational, parse_rational, poly_from_json, poly_to_json
from .family import build_family, predict, totally_complex_construct, verify_prediction
from .inertia import inertia_by_charpoly, inertia_by_congruence
from .linalg import matrix_from_json
from .realroots import count_real_roots, isolate_real_roots
from .resdisc import bezout_disc_check, disc_in_t
from .structure import phi_charpoly_u
from .sweep import default_workers, sweep_harness
from .worked_examples import verify_worked_examples


class InputError(Exception):
    """Bad user input, reported with the flag that carried it."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def load_json_arg(text: str, flag: str):
    """Read ``text`` as a path to a JSON file, or else as inline JSON."""
    if os.path.isfile(text):
        try:
            with open(text, encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(flag, f"cannot read JSON from {text}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        raise InputError(flag, f"neither a readable file nor valid JSON: {text!r}")


def load_poly(text: str, flag: str):
    obj = load_json_arg(text, flag)
    if not isinstance(obj, list) or any(not isinstance(c, str) for c in obj):
        raise InputError(flag, "expected a JSON array of rational strings")
    try:
        return poly_from_json(obj)
    except ParseError as exc:
        raise InputError(flag, str(exc))


def parse_range(text: str, flag: str) -> list[int]:
    """``"2..8"``, ``"3"`` or ``"2,4,6"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            vals = list(range(int(lo), int(hi) + 1))
        else:
            vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise InputError(flag, f"malformed range {text!r}")
    if not vals:
        raise InputError(flag, f"empty range {text!r}")
    return vals


def _xi(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _mode(text: str) -> str:
    return text.replace("-", "_")


# -- verbs ----------------------------------------------------------------


def cmd_count(args):
    f = load_poly(args.poly, "poly")
    sturm = count_real_roots(f)
    sig = inertia_by_congruence(bezout_of(f)).signature
    out = {
        "distinct_real_roots": sturm,
        "via": {"sturm": sturm, "bezout_signature": sig},
        "intervals": [iv.to_json() for iv in isolate_real_roots(f)],
    }
    return out, sturm == sig


def cmd_bezout(args):
    f1 = load_poly(args.f1, "f1")
    if args.f2 is None:
        M = bezout_of(f1, args.n)
    else:
        M = bezout_matrix(f1, load_poly(args.f2, "f2"), args.n)
    return M.to_json(), True


def cmd_inertia(args):
    obj = load_json_arg(args.matrix, "matrix")
    if isinstance(obj, list):
        obj = {"entries": obj}
    try:
        M = matrix_from_json(obj)
    except BezrootError as exc:
        raise InputError("matrix", str(exc))
    a = inertia_by_congruence(M)
    b = inertia_by_charpoly(M)
    out = a.to_json()
    out["methods_agree"] = a == b
    return out, a == b


def cmd_disc(args):
    f = load_poly(args.poly, "poly")
    chk = bezout_disc_check(f)
    out = {
        "discriminant": format_rational(chk.disc),
        "det_bezout": format_rational(chk.det_bezout),
        "ratio": None if chk.ratio is None else format_rational(chk.ratio),
        "lc_squared": format_rational(f.lc * f.lc),
    }
    return out, chk.det_bezout == f.lc * f.lc * chk.disc


def cmd_disc_t(args):
    g = load_poly(args.g, "--g")
    return disc_in_t(n=args.n, g=g).to_json(), True


def cmd_predict(args):
    spec = build_family(args.n, load_poly(args.g, "--g"))
    pred = predict(spec, args.threshold_mode)
    out = {"spec": spec.to_json(), **pred.to_json()}
    return out, True


def cmd_verify_family(args):
    spec = build_family(args.n, load_poly(args.g, "--g"))
    pred = predict(spec, args.threshold_mode)
    xis = args.xi or [pred.threshold, pred.threshold + 1, 1000 * pred.threshold]
    try:
        report = verify_prediction(spec, xis, prediction=pred)
    except ThresholdViolation as exc:
        raise InputError("--xi", str(exc))
    return report.to_json(), report.ok


def cmd_sweep(args):
    n_values = parse_range(args.n, "--n")
    s_values = parse_range(args.s, "--s") if args.s else None
    if args.trials < 1:
        raise InputError("--trials", "must be at least 1")
    workers = args.workers if args.workers else default_workers()
    try:
        report = sweep_harness(n_values, s_values, args.trials, args.seed, args.threshold_mode, workers)
    except ValueError as exc:
        raise InputError("--n", str(exc))
    if not args.full:
        report = {k: v for k, v in report.items() if k != "results"}
    return report, report["failed"] == 0


def cmd_phi(args):
    phi = phi_charpoly_u(args.s, args.n)
    return {"s": args.s, "n": args.n, "var": "x", "coeff_var": "t1", "phi": poly_to_json(phi)}, True


def cmd_totally_complex(args):
    tc = totally_complex_construct(args.n, load_poly(args.g, "--g"))
    return tc.to_json(), tc.ok


def cmd_verify_examples(args):
    rec = verify_worked_examples()
    return rec, rec["ok"]


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write the JSON report to this file")
    common.add_argument("--no-timing", action="store_true", help="omit the elapsed-time field")

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument(
        "--threshold-mode",
        type=_mode,
        choices=["max_root", "max_abs_root"],
        default="max_abs_root",
        help="max-root or max-abs-root (default)",
    )

    p = argparse.ArgumentParser(prog="bezroot", description="Exact real-root counting via Bezoutians.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("count", parents=[common], help="distinct real roots of a polynomial")
    c.add_argument("poly", help="JSON array of rational strings, ascending degree (or a file)")
    c.set_defaults(func=cmd_count, error_flag="poly")

    c = sub.add_parser("bezout", parents=[common], help="Bezoutian matrix of f1, f2 (or f, f')")
    c.add_argument("f1")
    c.add_argument("f2", nargs="?")
    c.add_argument("--n", type=int, help="matrix order (default max degree)")
    c.set_defaults(func=cmd_bezout, error_flag="f1")

    c = sub.add_parser("inertia", parents=[common], help="inertia of a rational symmetric matrix")
    c.add_argument("matrix", help='{"order": n, "entries": [[...]]} or a bare array of rows')
    c.set_defaults(func=cmd_inertia, error_flag="matrix")

    c = sub.add_parser("disc", parents=[common], help="discriminant and det of the Bezoutian")
    c.add_argument("poly")
    c.set_defaults(func=cmd_disc, error_flag="poly")

    c = sub.add_parser("disc-t", parents=[common], help="discriminant of x^n + t*g in t")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--g", required=True)
    c.set_defaults(func=cmd_disc_t, error_flag="--g")

    fam = sub.add_parser("family", help="the family x^n + t*g(x)")
    fsub = fam.add_subparsers(dest="action", required=True)

    c = fsub.add_parser("predict", parents=[common, mode])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--g", required=True)
    c.set_defaults(func=cmd_predict, error_flag="--g")

    c = fsub.add_parser("verify", parents=[common, mode])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--g", required=True)
    c.add_argument("--xi", type=_xi, action="append", help="repeatable; default: witness, witness+1, 1000*witness")
    c.set_defaults(func=cmd_verify_family, error_flag="--g")

    c = fsub.add_parser("sweep", parents=[common, mode])
    c.add_argument("--n", default="2..8", help="range such as 2..8")
    c.add_argument("--s", help="range of deg g (default 1..n-1)")
    c.add_argument("--trials", type=int, default=20)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--workers", type=int, help="process count (default BEZROOT_THREADS or all cores)")
    c.add_argument("--full", action="store_true", help="include every trial record")
    c.set_defaults(func=cmd_sweep, error_flag="--n")

    c = fsub.add_parser("phi", parents=[common])
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_phi, error_flag="--s")

    c = sub.add_parser("totally-complex", parents=[common], help="x^n + beta*g(x) with no real roots")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--g", required=True)
    c.set_defaults(func=cmd_totally_complex, error_flag="--g")

    ver = sub.add_parser("verify", help="reproduce reference computations")
    vsub = ver.add_subparsers(dest="target", required=True)
    c = vsub.add_parser("paper-examples", parents=[common])
    c.set_defaults(func=cmd_verify_examples, error_flag=None)
    return p


def _error(flag: Optional[str], message: str) -> int:
    doc = {"error": message}
    if flag:
        doc["flag"] = flag
    print(json.dumps(doc), file=sys.stderr)
    return 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        out, ok = args.func(args)
    except InputError as exc:
        return _error(exc.flag, str(exc))
    except BezrootError as exc:
        # domain errors (wrong degree, bad parity, ...) are input problems too
        return _error(args.error_flag, f"{type(exc).__name__}: {exc}")
    if not args.no_timing:
        out["elapsed_seconds"] = round(time.perf_counter() - t0, 3)
    text = json.dumps(out, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
