"""Command-line front end.

Subcommands: term, seq, qmatrix, hankel, det, verify, bench.  Values are
arbitrary-precision, so JSON output renders them as decimal strings.  Exit
codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from enum import Enum

from . import verify as verification
from .cassini import build_window
from .exact_linalg import IntMatrix, det
from .qmatrix import build_q, q_closed_tail
from .sequences import Strategy, hyperfib, sequence


class OutputFormat(Enum):
    PLAIN = "plain"
    JSON = "json"
    CSV = "csv"


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _matrix_strings(matrix: IntMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in matrix.to_rows()]


def _print_matrix(matrix: IntMatrix, fmt: OutputFormat) -> None:
    sep = "," if fmt is OutputFormat.CSV else " "
    for row in matrix.to_rows():
        print(sep.join(str(x) for x in row))


def _style(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    color = "32" if ok else "31"
    return f"\x1b[{color}m{text}\x1b[0m"


def cmd_term(args) -> int:
    value = hyperfib(args.r, args.n, Strategy(args.strategy))
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        _emit_json({"r": args.r, "n": args.n, "value": str(value)})
    else:
        print(value)
    return 0


def cmd_seq(args) -> int:
    if args.n_from > args.n_to:
        raise ValueError("--from must not exceed --to")
    values = sequence(args.r).terms(args.n_from, args.n_to + 1)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        _emit_json({
            "r": args.r,
            "from": args.n_from,
            "to": args.n_to,
            "values": [str(v) for v in values],
        })
    else:
        sep = "," if fmt is OutputFormat.CSV else " "
        for n, v in zip(range(args.n_from, args.n_to + 1), values):
            print(f"{n}{sep}{v}")
    return 0


def cmd_qmatrix(args) -> int:
    qm = build_q(args.r)
    fmt = OutputFormat(args.format)
    tail = q_closed_tail(args.r) if args.r >= 1 else None
    if fmt is OutputFormat.JSON:
        payload = {
            "r": args.r,
            "q": [str(x) for x in qm.q],
            "matrix": _matrix_strings(qm.matrix),
        }
        if args.verbose and tail is not None:
            payload["closed_tail"] = [str(x) for x in tail]
        _emit_json(payload)
        return 0
    _print_matrix(qm.matrix, fmt)
    if args.verbose:
        print("q: " + " ".join(str(x) for x in qm.q))
        if tail is None:
            print("closed tail: undefined for r = 0")
        else:
            agrees = tail == qm.q[-3:]
            print(
                "closed tail (q_r, q_r+1, q_r+2): "
                + " ".join(str(x) for x in tail)
                + (" [matches]" if agrees else " [MISMATCH]")
            )
    return 0


def cmd_hankel(args) -> int:
    window = build_window(args.m, args.n, args.r)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        _emit_json({
            "m": args.m,
            "n": args.n,
            "r": args.r,
            "matrix": _matrix_strings(window.matrix),
        })
    else:
        _print_matrix(window.matrix, fmt)
    return 0


def cmd_det(args) -> int:
    window = build_window(args.m, args.n, args.r)
    print(det(window.matrix, method=args.method))
    return 0


def cmd_verify(args) -> int:
    names = [part for part in args.suite.split(",") if part]
    reports = verification.verify_all(
        args.r_max, args.n_min, args.n_max, names, seed=args.seed
    )
    total_cases = 0
    total_failures = 0
    for report in reports:
        total_cases += report.cases
        total_failures += len(report.failures)
        print(
            f"suite {report.suite}: {report.cases} cases, "
            f"{len(report.failures)} failures ({report.elapsed:.2f}s)"
        )
        for failure in report.failures[:20]:
            print(f"  {failure.case}: computed {failure.computed}, expected {failure.expected}")
        if len(report.failures) > 20:
            print(f"  ... and {len(report.failures) - 20} more")
    ok = total_failures == 0
    verdict = "PASS" if ok else "FAIL"
    print(_style(
        f"{verdict}: {len(reports)} suites, {total_cases} cases, {total_failures} failures",
        ok,
    ))
    return 0 if ok else 1


def cmd_bench(args) -> int:
    strategies = _parse_strategies(args.strategy)
    if args.repeat < 1:
        raise ValueError("--repeat must be >= 1")
    if Strategy.PREFIX_SUM in strategies and args.n < 0:
        raise ValueError("prefix strategy is defined only for n >= 0")
    value = None
    rows = []
    for strat in strategies:
        times = []
        result = None
        for _ in range(args.repeat):
            start = time.perf_counter()
            result = hyperfib(args.r, args.n, strat)
            times.append(time.perf_counter() - start)
        if value is None:
            value = result
        elif result != value:
            print(
                f"error: strategy {strat.value} returned a different value",
                file=sys.stderr,
            )
            return 1
        rows.append((strat.value, times))
    print(f"value: {value}")
    for name, times in rows:
        print(
            f"{name}: best {min(times):.6f}s, "
            f"mean {sum(times) / len(times):.6f}s ({len(times)} runs)"
        )
    return 0


def _parse_strategies(text: str) -> list[Strategy]:
    parts = [p for p in text.split(",") if p]
    if "all" in parts:
        return [Strategy.PREFIX_SUM, Strategy.RECURRENCE, Strategy.MATRIX_POWER]
    if not parts:
        raise ValueError("no strategies selected")
    out = []
    for part in parts:
        try:
            strat = Strategy(part)
        except ValueError:
            raise ValueError(f"unknown strategy: {part}") from None
        if strat not in out:
            out.append(strat)
    return out


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=[f.value for f in OutputFormat],
                        default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfib",
        description="Exact hyperfibonacci terms, companion matrices, and "
                    "Cassini-style determinant checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("term", help="one hyperfibonacci term")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=[s.value for s in Strategy],
                   default="recurrence")
    _add_format(p)
    p.set_defaults(func=cmd_term)

    p = sub.add_parser("seq", help="a run of consecutive terms")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("qmatrix", help="companion matrix of a generation")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--verbose", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_qmatrix)

    p = sub.add_parser("hankel", help="Hankel window of terms")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("det", help="determinant of a Hankel window")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--method", choices=["bareiss", "cofactor"], default="bareiss")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument("--r-max", dest="r_max", type=_positive, required=True)
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--suite", default="all",
                   help="comma-separated subset of: all "
                        + " ".join(verification.SUITES))
    p.add_argument("--seed", type=_seed, default=verification.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the evaluation strategies")
    p.add_argument("--r", type=_nonneg, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", required=True,
                   help="comma-separated strategies, or: all")
    p.add_argument("--repeat", type=_positive, required=True)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    # terms grow to tens of thousands of digits; lift the int-to-str cap
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:   # argparse has already printed its message
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
