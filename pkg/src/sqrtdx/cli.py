"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 no convergence, 4 evaluation error.
Results go to stdout (or ``--out``), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys

from .expression import EvaluationError, Num, ParseError, parse_expression, to_polynomial, to_source
from .fractional import (
    corrected_vs_fractional_bridge,
    half_integral_polynomial,
    rescaled_half_integral,
    riemann_liouville_half_integral,
)
from .halfform import ordinary_integral
from .quadrature import (
    DEFAULT_SCHEDULE,
    DEFAULT_TOLERANCE,
    SAMPLE_RULES,
    FractionalOrder,
    Interval,
    NonConvergence,
    corrected_integral,
    corrected_integral_closed_form,
    graded_partition,
    limit_of_sums,
    partition_sum,
    uniform_partition,
)
from .ramanujan import expansion_error_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_EVALUATION = 4

CONVERGE_HEADER = ["n", "value", "extrapolant", "abs_error"]
RAMANUJAN_HEADER = ["n", "approximation", "direct", "abs_error"]


class UsageError(Exception):
    pass


def fmt(value: float) -> str:
    """Table format: 10 significant digits."""
    return f"{value:.10g}"


def csv_number(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _table(rows: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


@contextlib.contextmanager
def _output(path: str | None, default):
    if path is None:
        yield default
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _write_csv(stream, header, rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([csv_number(v) for v in row])


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("expected positive integers")
    return values


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _common(p: argparse.ArgumentParser):
    p.add_argument("--f", required=True, metavar="EXPR", help="integrand in x, e.g. 'x^2 + 3*sin(x)'")
    p.add_argument("--a", required=True, type=_finite)
    p.add_argument("--b", required=True, type=_finite)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqrtdx", description="Corrected integrals of f(x) sqrt(dx).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="extrapolated corrected integral")
    _common(p)
    p.add_argument("--alpha", type=_finite, default=0.5, help="order of (dx)^alpha, in (0, 1]")
    p.add_argument("--rule", choices=SAMPLE_RULES, default="right")
    p.add_argument("--schedule", type=_int_list, default=list(DEFAULT_SCHEDULE))
    p.add_argument("--tol", type=_finite, default=DEFAULT_TOLERANCE)

    p = sub.add_parser("converge", help="CSV of corrected sums and extrapolants")
    _common(p)
    p.add_argument("--n-start", type=_positive_int, default=DEFAULT_SCHEDULE[0])
    p.add_argument("--n-max", type=_positive_int, default=DEFAULT_SCHEDULE[-1])
    p.add_argument("--alpha", type=_finite, default=0.5)
    p.add_argument("--rule", choices=SAMPLE_RULES, default="right")
    p.add_argument("--tol", type=_finite, default=DEFAULT_TOLERANCE)
    p.add_argument(
        "--scheme",
        choices=("corrected", "naive"),
        default="corrected",
        help="'naive' drops the correction factor and is expected not to converge",
    )
    p.add_argument(
        "--mesh",
        choices=("uniform", "graded"),
        default="uniform",
        help="'graded' is a diagnostic: non-uniform meshes change the limit",
    )
    p.add_argument("--out", default=None, help="CSV path (default stdout)")

    p = sub.add_parser("fractional", help="Riemann-Liouville half-integral")
    _common(p)
    p.add_argument("--points", type=_positive_int, default=8, help="Gauss-Legendre nodes per panel")

    p = sub.add_parser("compare", help="corrected integral vs rescaled half-integral vs sqrt of integral")
    _common(p)

    p = sub.add_parser("ramanujan", help="CSV of expansion errors for sum sqrt(k) or sum 1/sqrt(k)")
    p.add_argument("--which", choices=("sqrt", "invsqrt"), required=True)
    p.add_argument("--n", type=_int_list, required=True, metavar="N1,N2,...")
    p.add_argument("--out", default=None)
    return parser


def _interval(args) -> Interval:
    try:
        return Interval(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _expression(args):
    try:
        return parse_expression(args.f)
    except ParseError as exc:
        raise UsageError(f"--f: {exc}") from None


def _order(alpha: float) -> FractionalOrder:
    try:
        return FractionalOrder(alpha)
    except ValueError as exc:
        raise UsageError(f"--alpha: {exc}") from None


def cmd_eval(args, out) -> int:
    f, interval, order = _expression(args), _interval(args), _order(args.alpha)
    if len(args.schedule) < 3 or any(b <= a for a, b in zip(args.schedule, args.schedule[1:])):
        raise UsageError("--schedule needs at least 3 strictly increasing values")
    report = corrected_integral(f, interval, order, args.schedule, args.tol, args.rule)
    rows = [("corrected_integral", fmt(report.extrapolated_limit))]
    poly = to_polynomial(f)
    if poly is not None:
        rows.append(("closed_form", fmt(corrected_integral_closed_form(poly, interval, order))))
    rows += [("residual", fmt(report.residual)), ("n_max", str(report.ns[-1]))]
    out.write(_table(rows))
    return EXIT_OK


def cmd_converge(args, out) -> int:
    f, interval, order = _expression(args), _interval(args), _order(args.alpha)
    ns = []
    n = args.n_start
    while n <= args.n_max:
        ns.append(n)
        n *= 2
    if len(ns) < 3:
        raise UsageError("--n-start/--n-max must give at least 3 doublings")
    if args.mesh == "graded":
        print("diagnostic: graded mesh; its limit is not the corrected integral", file=sys.stderr)
        partitions = [graded_partition(interval, n) for n in ns]
    else:
        partitions = [uniform_partition(interval, n) for n in ns]
    corrected = args.scheme == "corrected"
    values = [partition_sum(f, p, order, args.rule, corrected=corrected) for p in partitions]
    report = limit_of_sums(ns, values, args.tol)

    poly = to_polynomial(f)
    oracle = corrected_integral_closed_form(poly, interval, order) if poly is not None else None
    rows = [
        (n, v, e, None if oracle is None else abs(v - oracle))
        for (n, v), e in zip(report.samples, report.extrapolants)
    ]
    with _output(args.out, out) as stream:
        _write_csv(stream, CONVERGE_HEADER, rows)
    if not report.converged:
        print(str(NonConvergence(report, args.tol)), file=sys.stderr)
        return EXIT_NONCONVERGENCE
    return EXIT_OK


def cmd_fractional(args, out) -> int:
    f, interval = _expression(args), _interval(args)
    rows = [("half_integral", fmt(riemann_liouville_half_integral(f, interval, args.points)))]
    poly = to_polynomial(f)
    if poly is not None:
        rows.append(("closed_form", fmt(half_integral_polynomial(poly, interval))))
    if f == Num(1.0):
        rows.append(("bridge", fmt(corrected_vs_fractional_bridge(interval))))
    out.write(_table(rows))
    return EXIT_OK


def cmd_compare(args, out) -> int:
    f, interval = _expression(args), _interval(args)
    corrected = corrected_integral(f, interval).extrapolated_limit
    rescaled = rescaled_half_integral(f, interval)
    plain = ordinary_integral(f, interval)
    root = math.sqrt(plain) if plain >= 0 else math.nan
    out.write(f"integrand  {to_source(f)} on [{fmt(interval.a)}, {fmt(interval.b)}]\n")
    out.write(
        _table(
            [
                ("corrected_integral", fmt(corrected)),
                ("rescaled_half_integral", fmt(rescaled)),
                ("sqrt_of_integral", fmt(root)),
            ]
        )
    )
    if plain < 0:
        print("note: integral of f is negative; its square root is undefined", file=sys.stderr)
    return EXIT_OK


def cmd_ramanujan(args, out) -> int:
    ns = args.n
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise UsageError("--n values must be strictly increasing")
    which = "sqrt_sum" if args.which == "sqrt" else "inv_sqrt_sum"
    results = expansion_error_report(ns, which)
    rows = [(r.n, r.approximation, r.direct, r.abs_error) for r in results]
    with _output(args.out, out) as stream:
        _write_csv(stream, RAMANUJAN_HEADER, rows)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "converge": cmd_converge,
    "fractional": cmd_fractional,
    "compare": cmd_compare,
    "ramanujan": cmd_ramanujan,
}


def run(argv: list[str] | None = None, out=None) -> int:
    """Run one invocation and return its exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"sqrtdx {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergence as exc:
        print(f"sqrtdx {args.command}: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (EvaluationError, ArithmeticError) as exc:
        print(f"sqrtdx {args.command}: evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVALUATION


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
