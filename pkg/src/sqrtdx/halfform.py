"""Half-densities and half-forms on the real line.

A half-density on R is fixed by its value on the frame 1, since
``nu(s v) = nu(v) |s|^(1/2)`` for every scalar s.  A half-form
``sigma = f sqrt(dx)`` over an interval has tensor square ``f^2 dx`` and
Hilbert norm ``||sigma||^2 = integral |f|^2 dx``.  The corrected integral
maps half-forms to numbers; for constant f its square equals the norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .expression import BinOp, Expr, Num, as_expression, evaluate, to_polynomial
from .fractional import gauss_legendre
from .quadrature import (
    DEFAULT_SCHEDULE,
    DEFAULT_TOLERANCE,
    HALF,
    Interval,
    _interval,
    corrected_integral,
    polynomial_integral,
)


@dataclass(frozen=True)
class HalfDensity:
    base_value: complex = 1.0

    def __call__(self, frame: float) -> complex:
        return evaluate_half_density(self, frame)

    def act(self, scalar: float) -> "HalfDensity":
        """The half-density ``v -> nu(scalar * v)``."""
        if scalar == 0:
            raise ValueError("0 is not in GL(1, R)")
        return HalfDensity(self.base_value * math.sqrt(abs(scalar)))


def evaluate_half_density(nu: HalfDensity, frame: float) -> complex:
    if frame == 0:
        raise ValueError("0 is not a frame of R")
    return complex(nu.base_value) * math.sqrt(abs(frame))


@dataclass(frozen=True)
class HalfForm:
    """``coefficient * sqrt(dx)`` over ``interval``; the coefficient is real."""

    coefficient: Expr
    interval: Interval

    def __post_init__(self):
        object.__setattr__(self, "coefficient", as_expression(self.coefficient))
        object.__setattr__(self, "interval", _interval(self.interval))

    def __add__(self, other: "HalfForm") -> "HalfForm":
        if other.interval != self.interval:
            raise ValueError("half-forms live over different intervals")
        return HalfForm(BinOp("+", self.coefficient, other.coefficient), self.interval)

    def scale(self, c: float) -> "HalfForm":
        return HalfForm(BinOp("*", as_expression(c), self.coefficient), self.interval)


@dataclass(frozen=True)
class OneForm:
    """``coefficient * dx`` over ``interval``."""

    coefficient: Expr
    interval: Interval

    def __post_init__(self):
        object.__setattr__(self, "coefficient", as_expression(self.coefficient))
        object.__setattr__(self, "interval", _interval(self.interval))

    def integrate(self) -> float:
        return ordinary_integral(self.coefficient, self.interval)


def ordinary_integral(f, interval: Interval) -> float:
    """Exact for polynomials, composite Gauss-Legendre otherwise."""
    f = as_expression(f)
    interval = _interval(interval)
    poly = to_polynomial(f)
    if poly is not None:
        return polynomial_integral(poly, interval)
    return gauss_legendre(lambda x: evaluate(f, x), interval.a, interval.b, points=10, panels=64)


def tensor_square(sigma: HalfForm) -> OneForm:
    """sqrt(dx) (x) sqrt(dx) = dx, so f sqrt(dx) squares to f^2 dx."""
    return OneForm(BinOp("^", sigma.coefficient, Num(2.0)), sigma.interval)


def norm_squared(sigma: HalfForm) -> float:
    # real coefficient, so |f|^2 = f^2
    return tensor_square(sigma).integrate()


def corrected_integral_map(
    sigma: HalfForm,
    schedule=DEFAULT_SCHEDULE,
    tolerance: float = DEFAULT_TOLERANCE,
    rule: str = "right",
) -> float:
    """Extrapolated corrected integral of the coefficient at order 1/2."""
    report = corrected_integral(sigma.coefficient, sigma.interval, HALF, schedule, tolerance, rule)
    return report.extrapolated_limit
