"""Riemann-Liouville half-integral on [a, b] and its link to the corrected integral.

    D^{-1/2} f = 1/Gamma(1/2) * integral_a^b (b - t)^(-1/2) f(t) dt

The endpoint singularity at t = b is removed by t = b - u^2, which turns the
integral into ``2/Gamma(1/2) * integral_0^sqrt(b-a) f(b - u^2) du`` with a
smooth integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import Polynomial

from .expression import as_expression, evaluate
from .quadrature import Interval, _interval, as_polynomial

def gamma(x: float) -> float:
    """Gamma function for x > 0."""
    if not x > 0:
        raise ValueError(f"gamma is only supported for x > 0, got {x}")
    return math.gamma(x)


@lru_cache(maxsize=None)
def _gauss_legendre(m: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(m)
    return nodes, weights


def gauss_legendre(func, lo: float, hi: float, points: int = 8, panels: int = 16) -> float:
    """Composite Gauss-Legendre rule with ``panels`` equal panels of ``points`` nodes.

    ``func`` must accept a numpy array.
    """
    if points < 2:
        raise ValueError("need at least 2 quadrature points per panel")
    if panels < 1:
        raise ValueError("need at least one panel")
    nodes, weights = _gauss_legendre(points)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    fx = np.broadcast_to(func(x), x.shape).reshape(panels, points)
    return math.fsum((half[:, None] * weights[None, :] * fx).ravel())


@dataclass(frozen=True)
class FractionalIntegralSpec:
    integrand: object
    interval: Interval
    order: float = 0.5
    quadrature_points: int = 8

    def __post_init__(self):
        if not 0.0 < self.order <= 1.0:
            raise ValueError(f"order must lie in (0, 1], got {self.order}")
        if self.quadrature_points < 2:
            raise ValueError("quadrature_points must be >= 2")
        object.__setattr__(self, "interval", _interval(self.interval))
        object.__setattr__(self, "integrand", as_expression(self.integrand))

    def evaluate(self, panels: int = 16) -> float:
        if self.order != 0.5:
            raise NotImplementedError("only the half-integral (order 1/2) is supported")
        return riemann_liouville_half_integral(self.integrand, self.interval, self.quadrature_points, panels)


def riemann_liouville_half_integral(f, interval: Interval, quadrature_points: int = 8, panels: int = 16) -> float:
    """D^{-1/2} f over [a, b] via the substitution t = b - u^2."""
    if quadrature_points < 2:
        raise ValueError("quadrature_points must be >= 2")
    interval = _interval(interval)
    f = as_expression(f)
    b = interval.b
    integral = gauss_legendre(lambda u: evaluate(f, b - u * u), 0.0, math.sqrt(interval.length), quadrature_points, panels)
    return 2.0 * integral / gamma(0.5)


def half_integral_graded(f, interval: Interval, levels: int = 100, points: int = 10) -> float:
    """D^{-1/2} f by direct quadrature of the singular weight on a graded mesh.

    Panels ``[b - L 2^-k, b - L 2^-(k+1)]`` shrink geometrically towards the
    singular endpoint; the last sliver of width ``L 2^-levels`` is dropped,
    an error of at most ``2 sqrt(L 2^-levels) max|f| / sqrt(pi)``.
    Independent of the substitution route and much more expensive.
    """
    interval = _interval(interval)
    f = as_expression(f)
    b, length = interval.b, interval.length
    nodes, weights = _gauss_legendre(points)
    # work in s = b - t so the weight 1/sqrt(s) never sees a rounded difference
    edges = length * 0.5 ** np.arange(levels + 1)
    half = 0.5 * (edges[:-1] - edges[1:])
    mid = 0.5 * (edges[:-1] + edges[1:])
    s = mid[:, None] + half[:, None] * nodes[None, :]
    fx = np.broadcast_to(evaluate(f, (b - s).ravel()), (s.size,)).reshape(s.shape)
    terms = half[:, None] * weights[None, :] * fx / np.sqrt(s)
    return math.fsum(terms.ravel()) / gamma(0.5)


def half_integral_of_one(interval: Interval) -> float:
    """D^{-1/2} 1 = 2 sqrt(b - a) / Gamma(1/2)."""
    interval = _interval(interval)
    return 2.0 * math.sqrt(interval.length) / gamma(0.5)


def beta_integral_closed_form(d: float, p: float, x: float) -> float:
    """integral_0^x (x - y)^d y^p dy = Gamma(d+1) Gamma(p+1) / Gamma(d+p+2) * x^(d+p+1)."""
    if d <= -1 or p <= -1:
        raise ValueError(f"beta integral diverges unless d > -1 and p > -1 (got d={d}, p={p})")
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    log_beta = math.lgamma(d + 1) + math.lgamma(p + 1) - math.lgamma(d + p + 2)
    if d + p + 2 < 171:
        coeff = gamma(d + 1) * gamma(p + 1) / gamma(d + p + 2)
    else:
        coeff = math.exp(log_beta)
    return coeff * x ** (d + p + 1)


def half_integral_polynomial(f, interval: Interval) -> float:
    """Exact D^{-1/2} of a polynomial: expand in powers of (t - a), one beta integral per term."""
    interval = _interval(interval)
    shifted = as_polynomial(f)(Polynomial([interval.a, 1.0]))
    terms = [c * beta_integral_closed_form(-0.5, p, interval.length) for p, c in enumerate(shifted.coef) if c != 0]
    return math.fsum(terms) / gamma(0.5)


def corrected_vs_fractional_bridge(interval: Interval) -> float:
    """(Gamma(1/2)/2) * D^{-1/2} 1, which equals sqrt(b - a)."""
    return 0.5 * gamma(0.5) * half_integral_of_one(interval)


def rescaled_half_integral(f, interval: Interval, quadrature_points: int = 8) -> float:
    """(Gamma(1/2)/2) * D^{-1/2} f for general f.

    Coincides with the corrected integral only for constant f.
    """
    return 0.5 * gamma(0.5) * riemann_liouville_half_integral(f, interval, quadrature_points)

