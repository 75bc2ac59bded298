"""Command-line interface: ``threshfree <command> ...`` (or ``python -m threshfree``)."""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .cotree import CotreeError, binary_to_cotree, cotree_to_binary, parse_binary, parse_cotree
from .diagonalize import (
    bisect_theta_minus,
    bisect_theta_plus,
    diagonalize_full,
    inertia_closed_form,
    left_closed_form,
    mult_minus_one,
)
from .generators import INITIAL, GeneratorError, lfi, rfi
from .numeric import format_scalar, scalar_from_decimal, scalar_to_json
from .search import minimality_search
from .spectra import Interval, oracle_spectrum

WORKERS_ENV = "THRESHFREE_WORKERS"

GRAMMAR = """\
input grammar:
  cotree   T(a1,...,ar)       a_i >= 1, a_r >= 2
  binary   111100011 | 1^4 0^3 1^2   (starts and ends with 1)
  numbers  exact decimals such as 4.8, -3.3, 1e-9, or ratios p/q
"""


class DomainError(Exception):
    pass


def _cotree(text: str):
    return parse_cotree(text)


def _scalar(text: str) -> Fraction:
    try:
        return scalar_from_decimal(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _choices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive_scalar(text: str) -> Fraction:
    value = _scalar(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _emit(args, human: str, payload: dict, csv_rows: list[list] | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv" and csv_rows is not None:
        for row in csv_rows:
            print(",".join(str(v) for v in row))
    else:
        print(human)


def _decimals_for(tol: Fraction) -> int:
    return max(0, math.ceil(-math.log10(tol)))


def cmd_convert(args) -> None:
    text = " ".join(args.input).strip()
    if text.upper().startswith("T"):
        c = parse_cotree(text)
        b = cotree_to_binary(c)
        human = str(b)
    else:
        b = parse_binary(text)
        c = binary_to_cotree(b)
        human = str(c)
    _emit(args, human, {"cotree": c.to_json(), "binary": str(b), "run_length": b.run_length()})


def cmd_diag(args) -> None:
    c = _cotree(args.cotree)
    a = args.at
    outcome = diagonalize_full(c, -a)
    t = outcome.counts
    payload = {
        "cotree": c.to_json(),
        "at": scalar_to_json(a),
        "counts": {"greater": t.greater, "equal": t.equal, "less": t.less},
    }
    lines = [f"{c} relative to {format_scalar(a)}: greater={t.greater} equal={t.equal} less={t.less}"]
    if args.diagonal:
        payload["diagonal"] = [format_scalar(v) for v in outcome.diagonal]
        lines.append("diagonal: " + " ".join(payload["diagonal"]))
    if args.trace:
        payload["trace"] = [st.to_json() for st in outcome.trace]
        if args.format != "json":
            # one JSON object per line
            lines.extend(json.dumps(st.to_json()) for st in outcome.trace)
    _emit(args, "\n".join(lines), payload)


def cmd_inertia(args) -> None:
    c = _cotree(args.cotree)
    t = inertia_closed_form(c)
    m1 = mult_minus_one(c)
    left = left_closed_form(c)
    payload = {
        "cotree": c.to_json(),
        "n": c.n,
        "inertia": {"greater": t.greater, "equal": t.equal, "less": t.less},
        "mult_minus_one": m1,
        "left_target": left,
    }
    human = (
        f"{c}: n={c.n} inertia (pos, zero, neg) = ({t.greater}, {t.equal}, {t.less}); "
        f"mult(-1) = {m1}; eigenvalues >= -1: {left}"
    )
    _emit(args, human, payload)


def cmd_theta(args) -> None:
    c = _cotree(args.cotree)
    tol = args.tol
    try:
        value = bisect_theta_plus(c, tol) if args.side == "plus" else bisect_theta_minus(c, tol)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    text = f"{float(value):.{_decimals_for(tol)}f}"
    payload = {"cotree": c.to_json(), "side": args.side, "tol": format_scalar(tol),
               "value": scalar_to_json(value), "decimal": text}
    _emit(args, text, payload)


def _gen(args, fn, threshold) -> None:
    policy = args.choices if args.choices else INITIAL
    c, trace = fn(threshold, args.r, policy)
    payload = {"cotree": c.to_json(), "trace": trace.to_json()}
    rows = [["depth", "bound", "chosen", "remaining", "permanent"]]
    for lv in trace.levels:
        rows.append([lv.depth, f"{float(lv.bound):.6g}", lv.chosen, f"{float(lv.remaining):.6g}",
                     "" if lv.permanent is None else f"{float(lv.permanent):.6g}"])
    widths = [max(len(str(r[i])) for r in rows) for i in range(5)]
    table = "\n".join("  ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in rows)
    _emit(args, f"{c}\n{table}", payload, rows)


def cmd_rfi(args) -> None:
    _gen(args, rfi, args.n)


def cmd_lfi(args) -> None:
    _gen(args, lfi, args.m)


def _interval(args) -> Interval:
    try:
        if args.right is not None:
            return Interval.right(args.right)
        return Interval.left(args.left)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def cmd_check(args) -> None:
    c = _cotree(args.cotree)
    interval = _interval(args)
    free = interval.is_free(c)
    _emit(args, f"{c} is {'' if free else 'not '}{interval}-eigenvalue free",
          {"cotree": c.to_json(), "interval": interval.to_json(), "free": free})


def cmd_search(args) -> None:
    c = _cotree(args.cotree)
    interval = _interval(args)

    def progress(done, total):
        print(f"\rshards {done}/{total}", end="" if done < total else "\n", file=sys.stderr, flush=True)

    report = minimality_search(c, interval, workers=args.workers, progress=progress if args.progress else None)
    ce = ", ".join(map(str, report.counterexamples)) or "none"
    human = (
        f"base {c} ({'free' if report.base_is_free else 'NOT free'} on {interval})\n"
        f"lattice size {report.lattice_size} (prod a_i = {report.full_lattice_size}); "
        f"examined {report.examined}; complete={report.complete}\n"
        f"counterexamples: {ce}\n"
        f"wall time {report.wall_time:.2f}s with {report.workers} worker(s)"
    )
    _emit(args, human, report.to_json())


def cmd_oracle(args) -> None:
    c = _cotree(args.cotree)
    try:
        spectrum = oracle_spectrum(c, max_n=args.max_n)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    vals = [f"{float(v):.12g}" for v in spectrum.eigenvalues]
    payload = {"cotree": c.to_json(), "eigenvalues": vals, "error_bound": f"{float(spectrum.error_bound.max()):.3e}"}
    if args.format == "csv":
        sys.stdout.write(spectrum.to_csv())
        return
    _emit(args, "\n".join(vals), payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshfree",
        description="Eigenvalue location and eigenvalue-free generators for threshold graphs.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=GRAMMAR,
    )
    parser.add_argument("--version", action="version", version=__version__)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "json", "csv"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[fmt], help="binary sequence <-> cotree")
    p.add_argument("input", nargs="+")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("diag", parents=[fmt], help="eigenvalue counts relative to a value")
    p.add_argument("cotree")
    p.add_argument("--at", type=_scalar, required=True, help="reference value a")
    p.add_argument("--diagonal", action="store_true", help="print the congruent diagonal")
    p.add_argument("--trace", action="store_true", help="print the diagonalization trace")
    p.set_defaults(func=cmd_diag)

    p = sub.add_parser("inertia", parents=[fmt], help="closed-form inertia and related counts")
    p.add_argument("cotree")
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("theta", parents=[fmt], help="smallest positive / largest below -1 eigenvalue")
    p.add_argument("cotree")
    p.add_argument("--side", choices=("plus", "minus"), required=True)
    p.add_argument("--tol", type=_positive_scalar, default=Fraction(1, 10**9))
    p.set_defaults(func=cmd_theta)

    for name, flag, func, helptext in (
        ("rfi", "--n", cmd_rfi, "generate a (0, N]-eigenvalue free cotree"),
        ("lfi", "--m", cmd_lfi, "generate a [M, -1)-eigenvalue free cotree"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument(flag, type=_scalar, required=True)
        p.add_argument("--r", type=int, required=True, help="cotree depth")
        p.add_argument("--choices", type=_choices, help="explicit a_1,...,a_r instead of the initial choice")
        p.set_defaults(func=func)

    for name, func, helptext in (
        ("check", cmd_check, "test eigenvalue freeness on an interval"),
        ("search", cmd_search, "exhaustive minimality search below a cotree"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=helptext)
        p.add_argument("cotree")
        side = p.add_mutually_exclusive_group(required=True)
        side.add_argument("--right", type=_scalar, metavar="N", help="interval (0, N]")
        side.add_argument("--left", type=_scalar, metavar="M", help="interval [M, -1)")
        p.set_defaults(func=func)
        if name == "search":
            p.add_argument("--workers", type=int, default=int(os.environ.get(WORKERS_ENV, "1")))
            p.add_argument("--no-progress", dest="progress", action="store_false")

    p = sub.add_parser("oracle", parents=[fmt], help="dense spectrum (independent check)")
    p.add_argument("cotree")
    p.add_argument("--max-n", type=int, default=500)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "workers", 1) < 1:
        parser.print_usage(sys.stderr)
        print("threshfree: error: --workers must be at least 1", file=sys.stderr)
        return 2
    try:
        args.func(args)
    except (CotreeError, GeneratorError, DomainError) as exc:
        print(f"threshfree: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
