"""Command-line front end: ``balancing-pi {table,eval,verify,roots}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .bigreal import DEFAULT_PRECISION, MIN_PRECISION
from .errors import ConvergenceViolation, DomainError, IntegrityError, NoValidRoot
from .identities import ARITHMETIC_MODES, IDENTITIES, NEGATIVE_IDS, pi_identity_eval
from .published import TERM_COUNTS
from .roots import (
    QuadraticKind,
    QuarticKind,
    RootSolution,
    Target,
    solve_squared_quartic,
    solve_unit_arctan_quadratic,
    theorem3_arguments,
)
from .tables import DEFAULT_FIGURES, FORMATS, TABLE_COLUMNS, build_table, render
from .verify import SUITES, format_report, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NO_SERIES = 0, 1, 2, 3
PRECISION_ENV = "PI_BALANCING_PRECISION"
ROOT_KINDS = [k.value for k in QuadraticKind] + [k.value for k in QuarticKind]


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("expected non-negative integers")
    return values


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from None
    if value < MIN_PRECISION:
        raise UsageError(f"{PRECISION_ENV} must be at least {MIN_PRECISION}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balancing-pi",
        description="π series from balancing, Lucas-balancing, Fibonacci and Lucas numbers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=None,
                        help=f"working precision in decimal digits (default {DEFAULT_PRECISION}, or ${PRECISION_ENV})")
    common.add_argument("--format", choices=FORMATS, default="markdown")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", parents=[common], help="reproduce a convergence table")
    table.add_argument("--table", type=int, required=True, choices=sorted(TABLE_COLUMNS))
    table.add_argument("--terms", type=_int_list, default=list(TERM_COUNTS),
                       help="comma-separated term counts n (default 10,25,50,75,100)")
    table.add_argument("--m", type=_int_list, default=None, help="restrict to these m values")
    table.add_argument("--arithmetic", choices=ARITHMETIC_MODES, default="double",
                       help="double: terms in IEEE double as in a floating-point pipeline; exact: full precision")
    table.add_argument("--figures", type=int, default=DEFAULT_FIGURES)

    evaluate = sub.add_parser("eval", parents=[common], help="evaluate one π identity")
    evaluate.add_argument("identity", choices=sorted(IDENTITIES) + sorted(NEGATIVE_IDS))
    evaluate.add_argument("--m", type=int, default=0)
    evaluate.add_argument("--terms", type=int, default=10, help="last summation index N")
    evaluate.add_argument("--x", default=None, help="polynomial argument; only x = 1 identities exist")
    evaluate.add_argument("--arithmetic", choices=ARITHMETIC_MODES, default="double",
                          help="double (default) matches the table cells; exact sums at full precision")
    evaluate.add_argument("--figures", type=int, default=DEFAULT_FIGURES)

    verify = sub.add_parser("verify", parents=[common], help="run self-verification suites")
    verify.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))

    roots = sub.add_parser("roots", parents=[common], help="solve an argument equation")
    roots.add_argument("kind", choices=ROOT_KINDS)
    roots.add_argument("--m", type=int, default=0)
    roots.add_argument("--target", choices=[t.value for t in Target], default=None,
                       help="angle other than π/4 (luc-even and fib-odd only)")
    return parser


# -- commands --------------------------------------------------------------


def cmd_table(args, precision: int) -> tuple[str, int]:
    rows = build_table(args.table, args.terms, args.m, precision, args.arithmetic, args.figures)
    return render(rows, args.format), EXIT_OK


def _records(pairs: list[tuple[str, str]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(dict(pairs), indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([k for k, _ in pairs])
        writer.writerow([v for _, v in pairs])
        return buffer.getvalue()
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs) + "\n"


def cmd_eval(args, precision: int) -> tuple[str, int]:
    if args.x is not None and args.identity in IDENTITIES:
        if IDENTITIES[args.identity].x is None:
            raise UsageError(f"{args.identity} takes m, not x")
        if args.x.strip() not in ("1", "1.0"):
            raise UsageError(f"{args.identity} exists only at x = 1")
    report = pi_identity_eval(args.identity, args.m, args.terms, precision, args.arithmetic)
    figures = args.figures
    pairs = [
        ("identity", report.identity),
        ("m", str(report.m)),
        ("terms", f"n = 0..{report.N}"),
        ("arithmetic", report.arithmetic),
        ("partial_sum", report.sum.to_string(figures)),
        ("closed_form", report.closed_form.to_string(figures)),
        ("tail_bound", report.tail_bound.to_string(3)),
        ("pi_estimate", report.pi_estimate.to_string(max(figures, min(report.digits + 3, precision)))),
        ("digits", str(report.digits)),
    ]
    return _records(pairs, args.format), EXIT_OK


def cmd_verify(args, precision: int) -> tuple[str, int]:
    checks = run_suite(args.suite, precision)
    failed = any(not c.passed for c in checks)
    if args.format == "markdown":
        text = format_report(checks)
    elif args.format == "json":
        text = json.dumps([c.__dict__ for c in checks], indent=2) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["suite", "name", "passed", "worst", "detail"])
        for c in checks:
            writer.writerow([c.suite, c.name, c.passed, c.worst, c.detail])
        text = buffer.getvalue()
    return text, EXIT_VERIFY if failed else EXIT_OK


def _solve(args, precision: int) -> RootSolution:
    if args.target is not None:
        if args.kind not in (QuadraticKind.LUC_EVEN.value, QuadraticKind.FIB_ODD.value):
            raise UsageError("--target applies to luc-even and fib-odd only")
        return theorem3_arguments(args.target, args.kind, args.m, precision)
    if args.kind in {k.value for k in QuadraticKind}:
        return solve_unit_arctan_quadratic(args.kind, args.m, precision)
    return solve_squared_quartic(args.kind, args.m, precision)


def _equation_text(solution: RootSolution) -> str:
    degree = len(solution.equation) - 1
    parts = []
    for power, c in zip(range(degree, -1, -1), solution.equation):
        coefficient = c if isinstance(c, int) else c.to_string(20)
        parts.append(f"({coefficient})" + (f" z^{power}" if power > 1 else " z" if power == 1 else ""))
    return " + ".join(parts) + " = 0"


def cmd_roots(args, precision: int) -> tuple[str, int]:
    solution = _solve(args, precision)
    figures = min(precision, 40)
    roots = [
        (r.re.to_string(figures) if r.is_real() else
         f"{r.re.to_string(figures)} {'-' if r.im.sign() < 0 else '+'} {abs(r.im).to_string(figures)}i (complex)")
        for r in solution.roots
    ]
    pairs = [
        ("kind", solution.kind),
        *([] if solution.m is None else [("m", str(solution.m))]),
        ("equation", _equation_text(solution)),
        *[(f"root_{i + 1}", text) for i, text in enumerate(roots)],
        ("threshold", solution.threshold.to_string(figures)),
        ("verdict", solution.verdict.value),
        ("selected", solution.selected.to_string(figures) if solution.selected is not None else "none"),
    ]
    return _records(pairs, args.format), EXIT_OK


COMMANDS = {"table": cmd_table, "eval": cmd_eval, "verify": cmd_verify, "roots": cmd_roots}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = args.precision if args.precision is not None else default_precision()
        if precision < MIN_PRECISION:
            raise UsageError(f"--precision must be at least {MIN_PRECISION}")
        text, status = COMMANDS[args.command](args, precision)
    except (NoValidRoot, ConvergenceViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_SERIES
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
