#!/usr/bin/env python3
"""Corrected integrals of a few integrands across orders alpha and sample rules.

Prints one row per (integrand, alpha, rule): extrapolated limit, closed form
where available, residual and the fitted order of the raw sums.
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from sqrtdx.expression import parse_expression, to_polynomial
from sqrtdx.quadrature import DEFAULT_SCHEDULE, Interval, corrected_integral, corrected_integral_closed_form


@dataclass
class SweepConfig:
    integrands: list = field(default_factory=lambda: ["1", "x", "x^2", "x^3 - 2*x", "sin(x)", "exp(-x^2)"])
    interval: tuple = (0.0, 1.0)
    alphas: list = field(default_factory=lambda: [1.0, 0.5, 1 / 3, 0.25])
    rules: list = field(default_factory=lambda: ["left", "right", "midpoint"])
    schedule: tuple = DEFAULT_SCHEDULE
    tolerance: float = 1e-9


def sweep(cfg: SweepConfig):
    interval = Interval(*cfg.interval)
    for source in cfg.integrands:
        f = parse_expression(source)
        poly = to_polynomial(f)
        for alpha in cfg.alphas:
            closed = corrected_integral_closed_form(poly, interval, alpha) if poly is not None else None
            for rule in cfg.rules:
                r = corrected_integral(f, interval, alpha, cfg.schedule, cfg.tolerance, rule, strict=False)
                yield {
                    "integrand": source,
                    "alpha": alpha,
                    "rule": rule,
                    "limit": r.extrapolated_limit,
                    "closed_form": closed,
                    "residual": r.residual,
                    "raw_order": r.fitted_rate,
                    "converged": r.converged,
                }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=float, default=0.0)
    parser.add_argument("--b", type=float, default=1.0)
    parser.add_argument("--csv", action="store_true", help="emit CSV instead of a table")
    args = parser.parse_args()
    rows = list(sweep(SweepConfig(interval=(args.a, args.b))))
    if args.csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return
    print(f"{'integrand':<12}{'alpha':>8}{'rule':>10}{'limit':>20}{'closed form':>20}{'residual':>11}{'order':>8}")
    for r in rows:
        closed = "" if r["closed_form"] is None else f"{r['closed_form']:.14g}"
        print(
            f"{r['integrand']:<12}{r['alpha']:>8.4g}{r['rule']:>10}{r['limit']:>20.14g}{closed:>20}"
            f"{r['residual']:>11.2e}{r['raw_order']:>8.3f}"
        )


if __name__ == "__main__":
    main()
