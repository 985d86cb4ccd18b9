"""Corrected Riemann sums for the half-form sqrt(dx)."""

from .expression import EvaluationError, ParseError, evaluate, parse_expression, to_source
from .fractional import (
    beta_integral_closed_form,
    corrected_vs_fractional_bridge,
    gamma,
    half_integral_of_one,
    riemann_liouville_half_integral,
)
from .halfform import HalfDensity, HalfForm, OneForm, corrected_integral_map, norm_squared, tensor_square
from .quadrature import (
    ConvergenceReport,
    FractionalOrder,
    Interval,
    NonConvergence,
    corrected_integral,
    corrected_integral_closed_form,
    corrected_sum,
    integral_function,
    monomial_corrected_formula,
    naive_sqrt_sum,
    uniform_partition,
)
from .ramanujan import (
    ZetaConstants,
    expansion_error_report,
    inv_sqrt_sum_direct,
    inv_sqrt_sum_ramanujan,
    sqrt_sum_direct,
    sqrt_sum_ramanujan,
)

__version__ = "0.1.0"
