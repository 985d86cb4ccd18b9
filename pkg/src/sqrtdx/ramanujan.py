"""Asymptotic expansions of the power sums of k^(1/2) and k^(-1/2).

    sum_{k<=n} sqrt(k)   ~ (2/3) n^(3/2) + (1/2) n^(1/2) - zeta(3/2)/(4 pi) + 1/(24 sqrt(n))
    sum_{k<=n} 1/sqrt(k) ~ 2 sqrt(n) + 1/(2 sqrt(n)) + zeta(1/2)

Only the displayed terms are used.  Their remainders are of order
n^(-5/2) and n^(-3/2), far below float64 resolution of the sums themselves
for large n, so the direct sums are accumulated exactly in fixed point and
errors are measured with mpmath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath
import numpy as np

_FIXED_DIGITS = 30


@dataclass(frozen=True)
class ZetaConstants:
    zeta_three_halves: float = 2.612375348685488
    zeta_half: float = -1.4603545088095868


DEFAULT_CONSTANTS = ZetaConstants()


@dataclass(frozen=True)
class ExpansionResult:
    n: int
    approximation: float
    direct: float
    abs_error: float


def _check_n(n: int) -> int:
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return int(n)


def _fixed_point_sum(n: int, inverse: bool, digits: int) -> int:
    # each term is floor(k^(+-1/2) * 10^digits); the integer total is exact
    scale = 10 ** (2 * digits)
    if inverse:
        return sum(math.isqrt(scale // k) for k in range(n, 0, -1))
    return sum(math.isqrt(k * scale) for k in range(1, n + 1))


def _finish(total: int, digits: int, precision: int | None):
    # truncation bias is below n * 10^-digits
    if precision is None:
        return total / 10**digits
    with mpmath.workdps(precision):
        return mpmath.mpf(total) / mpmath.mpf(10) ** digits


def sqrt_sum_direct(n: int, precision: int | None = None):
    """sqrt(1) + ... + sqrt(n), summed in increasing k.

    Returns a float, or an mpmath number carrying ``precision`` digits.
    """
    n = _check_n(n)
    digits = max(_FIXED_DIGITS, (precision or 0) + 5)
    return _finish(_fixed_point_sum(n, False, digits), digits, precision)


def inv_sqrt_sum_direct(n: int, precision: int | None = None):
    """1/sqrt(1) + ... + 1/sqrt(n), smallest terms first."""
    n = _check_n(n)
    digits = max(_FIXED_DIGITS, (precision or 0) + 5)
    return _finish(_fixed_point_sum(n, True, digits), digits, precision)


def sqrt_sum_ramanujan(n: int, constants: ZetaConstants = DEFAULT_CONSTANTS, precision: int | None = None):
    n = _check_n(n)
    if precision is None:
        r = math.sqrt(n)
        return 2.0 / 3.0 * n * r + 0.5 * r - constants.zeta_three_halves / (4.0 * math.pi) + 1.0 / (24.0 * r)
    with mpmath.workdps(precision):
        r = mpmath.sqrt(n)
        z = mpmath.mpf(constants.zeta_three_halves)
        return mpmath.mpf(2) / 3 * n * r + r / 2 - z / (4 * mpmath.pi) + 1 / (24 * r)


def inv_sqrt_sum_ramanujan(n: int, constants: ZetaConstants = DEFAULT_CONSTANTS, precision: int | None = None):
    n = _check_n(n)
    if precision is None:
        r = math.sqrt(n)
        return 2.0 * r + 0.5 / r + constants.zeta_half
    with mpmath.workdps(precision):
        r = mpmath.sqrt(n)
        return 2 * r + 1 / (2 * r) + mpmath.mpf(constants.zeta_half)


_SERIES = {
    "sqrt_sum": (sqrt_sum_direct, sqrt_sum_ramanujan),
    "inv_sqrt_sum": (inv_sqrt_sum_direct, inv_sqrt_sum_ramanujan),
}


def expansion_error_report(
    n_values: Sequence[int],
    which: str = "sqrt_sum",
    constants: ZetaConstants = DEFAULT_CONSTANTS,
    precision: int = 40,
) -> list[ExpansionResult]:
    """Compare an expansion against the direct sum at each n.

    The difference is taken at ``precision`` digits before rounding to float.
    """
    if which not in _SERIES:
        raise ValueError(f"which must be one of {sorted(_SERIES)}, got {which!r}")
    ns = [_check_n(n) for n in n_values]
    if not ns:
        raise ValueError("n_values must be nonempty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n_values must be strictly increasing")
    direct_fn, approx_fn = _SERIES[which]
    rows = []
    for n in ns:
        with mpmath.workdps(precision):
            direct = direct_fn(n, precision)
            approx = approx_fn(n, constants, precision)
            err = abs(approx - direct)
        rows.append(ExpansionResult(n, float(approx), float(direct), float(err)))
    return rows


def error_decay_slope(results: Sequence[ExpansionResult]) -> float:
    """Least-squares slope of log(abs_error) against log(n)."""
    ns = np.log([r.n for r in results])
    errs = np.log([r.abs_error for r in results])
    return float(np.polyfit(ns, errs, 1)[0])
