"""Corrected Riemann sums for ``f(x) (dx)^alpha`` and their limits.

The plain sum ``sum f(x_i) * (dx_i)^alpha`` over a uniform partition grows
like ``n^(1 - alpha)``.  Multiplying by the correction factor
``gamma(n) = n^(alpha - 1)`` gives a finite limit, which on a uniform mesh is

    (b - a)^(alpha - 1) * integral_a^b f(x) dx

At ``alpha = 1/2`` that is ``integral f / sqrt(b - a)``; for ``f = 1`` the
sum equals ``sqrt(b - a)`` at every ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from .expression import Expr, as_expression, evaluate, to_polynomial

SAMPLE_RULES = ("left", "right", "midpoint")
DEFAULT_SCHEDULE = (64, 128, 256, 512, 1024, 2048, 4096)
DEFAULT_TOLERANCE = 1e-9


class NonConvergence(ArithmeticError):
    """The extrapolated limit did not settle within tolerance.

    The partial :class:`ConvergenceReport` is kept on ``self.report``.
    """

    def __init__(self, report: "ConvergenceReport", tolerance: float):
        self.report = report
        self.tolerance = tolerance
        super().__init__(
            f"no convergence after n={report.samples[-1][0]}: residual {report.residual:.3e} "
            f"exceeds tolerance {tolerance:.3e}"
        )


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"interval endpoints must be finite, got [{a}, {b}]")
        if not a < b:
            raise ValueError(f"interval needs a < b, got [{a}, {b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> float:
        return self.b - self.a


@dataclass(frozen=True)
class FractionalOrder:
    """Exponent alpha of ``(dx)^alpha``; 1/2 is the half-form case."""

    alpha: float = 0.5

    def __post_init__(self):
        alpha = float(self.alpha)
        if not 0.0 < alpha <= 1.0:
            raise ValueError(f"order must lie in (0, 1], got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    def correction(self, n: int) -> float:
        return correction_factor(n, self)


HALF = FractionalOrder(0.5)


def _order(order) -> FractionalOrder:
    return order if isinstance(order, FractionalOrder) else FractionalOrder(order)


def _interval(interval) -> Interval:
    return interval if isinstance(interval, Interval) else Interval(*interval)


def correction_factor(n: int, order: FractionalOrder | float = HALF) -> float:
    """gamma(n) = n^(alpha - 1); equals 1/sqrt(n) for alpha = 1/2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    alpha = _order(order).alpha
    if alpha == 0.5:
        return 1.0 / math.sqrt(n)
    return float(n) ** (alpha - 1.0)


@dataclass(frozen=True, eq=False)
class Partition:
    interval: Interval
    points: np.ndarray
    uniform: bool = False

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size < 2:
            raise ValueError("a partition needs at least two points")
        if pts[0] != self.interval.a or pts[-1] != self.interval.b:
            raise ValueError("partition must start at a and end at b")
        if np.any(np.diff(pts) <= 0):
            raise ValueError("partition points must be strictly increasing")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.size - 1

    @property
    def widths(self) -> np.ndarray:
        # uniform meshes use the exact common width, not rounded differences
        if self.uniform:
            return np.full(self.n, self.interval.length / self.n)
        return np.diff(self.points)

    def sample_points(self, rule: str = "right") -> np.ndarray:
        if rule == "right":
            return self.points[1:]
        if rule == "left":
            return self.points[:-1]
        if rule == "midpoint":
            return 0.5 * (self.points[:-1] + self.points[1:])
        raise ValueError(f"unknown sample rule {rule!r}; use one of {SAMPLE_RULES}")


def uniform_partition(interval: Interval, n: int) -> Partition:
    interval = _interval(interval)
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    n = int(n)
    pts = interval.a + interval.length * (np.arange(n + 1) / n)
    pts[0], pts[-1] = interval.a, interval.b
    return Partition(interval, pts, uniform=True)


def partition_from_points(interval: Interval, points: Sequence[float]) -> Partition:
    """Arbitrary (non-uniform) mesh.  Only used for diagnostics."""
    return Partition(_interval(interval), np.asarray(points, dtype=float), uniform=False)


def graded_partition(interval: Interval, n: int, power: float = 2.0) -> Partition:
    """Mesh ``a + (b - a) * (i/n)^power`` clustered at ``a``."""
    interval = _interval(interval)
    s = (np.arange(n + 1) / n) ** power
    pts = interval.a + interval.length * s
    pts[0], pts[-1] = interval.a, interval.b
    return Partition(interval, pts)


def partition_sum(f, partition: Partition, order=HALF, rule: str = "right", corrected: bool = True) -> float:
    """``gamma(n) * sum f(s_i) (dx_i)^alpha`` on an arbitrary partition.

    With ``corrected=False`` the factor gamma(n) is dropped (the divergent sum).
    Terms are accumulated with ``math.fsum`` in index order, so the result
    is reproducible bit for bit.
    """
    order = _order(order)
    f = as_expression(f)
    values = np.broadcast_to(evaluate(f, partition.sample_points(rule)), (partition.n,))
    n = partition.n
    if partition.uniform:
        # gamma(n) * h^alpha = (b - a)^alpha / n, so the sum is a scaled mean;
        # this keeps constant integrands exact at every n
        total = math.fsum(values) / n * _power(partition.interval.length, order.alpha)
        return total if corrected else total * _power(n, 1.0 - order.alpha)
    total = math.fsum(values * partition.widths**order.alpha)
    if corrected:
        total *= correction_factor(n, order)
    return total


def _power(x: float, p: float) -> float:
    return math.sqrt(x) if p == 0.5 else x**p


def corrected_sum(f, interval: Interval, n: int, order=HALF, rule: str = "right") -> float:
    """gamma(n) * sum_i f(s_i) * h^alpha on the uniform n-partition."""
    return partition_sum(f, uniform_partition(interval, n), order, rule)


def naive_sum(f, interval: Interval, n: int, order=HALF, rule: str = "right") -> float:
    return partition_sum(f, uniform_partition(interval, n), order, rule, corrected=False)


def naive_sqrt_sum(interval: Interval, n: int) -> float:
    """sum_i sqrt(dx_i) on the uniform n-partition, i.e. sqrt((b - a) n)."""
    return naive_sum(1.0, interval, n)


# --------------------------------------------------------------------------
# Limits


@dataclass
class ConvergenceReport:
    samples: list[tuple[int, float]]
    extrapolants: list[float]
    extrapolated_limit: float
    fitted_rate: float
    residual: float
    converged: bool = field(default=True)

    @property
    def ns(self) -> list[int]:
        return [n for n, _ in self.samples]

    @property
    def values(self) -> list[float]:
        return [v for _, v in self.samples]


def richardson_table(ns: Sequence[int], values: Sequence[float], max_order: int | None = None) -> list[float]:
    """Diagonal of the Richardson/Neville table for ``L + c1/n + c2/n^2 + ...``.

    Entry ``k`` uses the samples ``0..k`` and eliminates up to
    ``min(k, max_order)`` powers of ``1/n``.  ``max_order=1`` is the plain
    ``L + c/n`` model.
    """
    m = len(ns)
    depth = m - 1 if max_order is None else min(max_order, m - 1)
    table = [[float(v)] for v in values]
    for i in range(1, m):
        for j in range(1, min(i, depth) + 1):
            ratio = ns[i] / ns[i - j]
            prev, cur = table[i - 1][j - 1], table[i][j - 1]
            table[i].append(cur + (cur - prev) / (ratio - 1.0))
    return [row[-1] for row in table]


def convergence_order(ns: Sequence[int], errors: Sequence[float]) -> float:
    """Least-squares p in ``|error| ~ C n^(-p)``; nan if fewer than two nonzero errors."""
    pairs = [(n, abs(e)) for n, e in zip(ns, errors) if e != 0 and math.isfinite(e)]
    if len(pairs) < 2:
        return math.nan
    x = np.log([n for n, _ in pairs])
    y = np.log([e for _, e in pairs])
    slope = np.polyfit(x, y, 1)[0]
    return float(-slope)


def _check_schedule(schedule: Sequence[int]) -> list[int]:
    ns = [int(n) for n in schedule]
    if len(ns) < 3:
        raise ValueError("schedule needs at least 3 entries")
    if ns[0] < 1 or any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("schedule must be strictly increasing positive integers")
    return ns


def limit_of_sums(
    ns: Sequence[int],
    values: Sequence[float],
    tolerance: float = DEFAULT_TOLERANCE,
    max_order: int | None = None,
) -> ConvergenceReport:
    """Extrapolate a sequence of sums to n -> infinity.

    Converged when the last two extrapolants differ by at most
    ``tolerance * max(1, |limit|)``.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    ns = list(ns)
    values = [float(v) for v in values]
    extrapolants = richardson_table(ns, values, max_order)
    limit = extrapolants[-1]
    residual = abs(extrapolants[-1] - extrapolants[-2]) if math.isfinite(limit) else math.inf
    rate = convergence_order(ns, [v - limit for v in values]) if math.isfinite(limit) else math.nan
    report = ConvergenceReport(
        samples=list(zip(ns, values)),
        extrapolants=extrapolants,
        extrapolated_limit=limit,
        fitted_rate=rate,
        residual=residual,
    )
    report.converged = residual <= tolerance * max(1.0, abs(limit))
    return report


def corrected_integral(
    f,
    interval: Interval,
    order=HALF,
    schedule: Sequence[int] = DEFAULT_SCHEDULE,
    tolerance: float = DEFAULT_TOLERANCE,
    rule: str = "right",
    max_order: int | None = None,
    corrected: bool = True,
    strict: bool = True,
) -> ConvergenceReport:
    """Limit of corrected sums over ``schedule``, accelerated by Richardson extrapolation.

    Raises :class:`NonConvergence` when the residual exceeds the tolerance,
    unless ``strict`` is false, in which case the report comes back with
    ``converged=False``.  ``corrected=False`` drops gamma(n) and is expected
    to fail.
    """
    interval = _interval(interval)
    f = as_expression(f)
    ns = _check_schedule(schedule)
    partitions = [uniform_partition(interval, n) for n in ns]
    values = [partition_sum(f, p, order, rule, corrected=corrected) for p in partitions]
    report = limit_of_sums(ns, values, tolerance, max_order)
    if strict and not report.converged:
        raise NonConvergence(report, tolerance)
    return report


# --------------------------------------------------------------------------
# Closed forms


def as_polynomial(f) -> Polynomial:
    if isinstance(f, Polynomial):
        return f
    if isinstance(f, (int, float)):
        return Polynomial([float(f)])
    if isinstance(f, (list, tuple, np.ndarray)):
        return Polynomial(np.asarray(f, dtype=float))
    poly = to_polynomial(as_expression(f))
    if poly is None:
        raise ValueError(f"integrand is not a polynomial: {f!r}")
    return poly


def polynomial_integral(f, interval: Interval) -> float:
    """Ordinary integral of a polynomial over the interval, term by term."""
    interval = _interval(interval)
    antiderivative = as_polynomial(f).integ()
    return float(antiderivative(interval.b) - antiderivative(interval.a))


def corrected_integral_closed_form(f, interval: Interval, order=HALF) -> float:
    """Exact limit ``(b - a)^(alpha - 1) * integral_a^b f`` for polynomial f."""
    interval = _interval(interval)
    alpha = _order(order).alpha
    return interval.length ** (alpha - 1.0) * polynomial_integral(f, interval)


def monomial_corrected_formula(k: int, interval: Interval) -> float:
    """Corrected half-form integral of ``x^k``, assembled from the power sums.

    Expanding ``(a + i h)^k`` binomially and using
    ``sum_{i<=n} i^j ~ n^(j+1)/(j+1)`` gives
    ``sqrt(b-a) * sum_j C(k,j) a^(k-j) (b-a)^j / (j+1)``.
    For k=2 the middle term is ``a (b-a)^(3/2)``.
    """
    if k < 0 or int(k) != k:
        raise ValueError(f"k must be a non-negative integer, got {k}")
    interval = _interval(interval)
    a, length = interval.a, interval.length
    terms = [math.comb(k, j) * a ** (k - j) * length**j / (j + 1) for j in range(k + 1)]
    return math.sqrt(length) * math.fsum(terms)


def integral_function(x: float) -> float:
    """F(x) = corrected half-form integral of 1 over [0, x], i.e. sqrt(x).

    F(0) = 0 by continuity.
    """
    if x < 0:
        raise ValueError(f"F is defined for x >= 0, got {x}")
    if x == 0:
        return 0.0
    # constants are summed exactly at any n, so one subinterval suffices
    return corrected_sum(1.0, Interval(0.0, x), 1)
