import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from sqrtdx.fractional import (
    FractionalIntegralSpec,
    beta_integral_closed_form,
    corrected_vs_fractional_bridge,
    gamma,
    gauss_legendre,
    half_integral_graded,
    half_integral_of_one,
    half_integral_polynomial,
    rescaled_half_integral,
    riemann_liouville_half_integral,
)
from sqrtdx.quadrature import Interval, corrected_integral_closed_form

SQRT_PI = math.sqrt(math.pi)


@st.composite
def intervals(draw):
    a = draw(st.floats(-10, 10))
    return Interval(a, a + draw(st.floats(0.01, 10)))


# --------------------------------------------------------------------------
# gamma


@pytest.mark.parametrize("x, expected", [(0.5, SQRT_PI), (1, 1.0), (5, 24.0)])
def test_gamma_examples(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("k", range(1, 11))
def test_gamma_factorials(k):
    assert gamma(k) == math.factorial(k - 1)


@given(st.floats(0.5, 171))
def test_gamma_relative_error(x):
    with mpmath.workdps(30):
        ref = mpmath.gamma(x)
        assert abs(mpmath.mpf(gamma(x)) / ref - 1) <= 1e-12


@pytest.mark.parametrize("x", [0, -1, -0.5])
def test_gamma_rejects_nonpositive(x):
    with pytest.raises(ValueError):
        gamma(x)


# --------------------------------------------------------------------------
# half-integral


@pytest.mark.parametrize(
    "source, interval, expected",
    [
        ("1", (0, 1), 2 / SQRT_PI),
        ("1", (0, 9), 6 / SQRT_PI),
        ("x", (0, 1), 4 / (3 * SQRT_PI)),
    ],
)
def test_half_integral_examples(source, interval, expected):
    assert riemann_liouville_half_integral(source, Interval(*interval)) == pytest.approx(expected, abs=1e-12)


def test_half_integral_of_x_via_beta():
    # B(1/2, 2) / Gamma(1/2) = Gamma(2) / Gamma(5/2)
    assert 4 / (3 * SQRT_PI) == pytest.approx(gamma(2) / gamma(2.5), rel=1e-15)


@pytest.mark.parametrize(
    "interval, expected",
    [((0, 1), 2 / SQRT_PI), ((0, 9), 6 / SQRT_PI), ((3, 3 + math.pi**2 / 4), SQRT_PI)],
)
def test_half_integral_of_one(interval, expected):
    assert half_integral_of_one(Interval(*interval)) == pytest.approx(expected, rel=1e-15)


def test_point_count_validation():
    with pytest.raises(ValueError):
        riemann_liouville_half_integral("x", Interval(0, 1), quadrature_points=1)
    with pytest.raises(ValueError):
        FractionalIntegralSpec("x", (0, 1), quadrature_points=1)
    with pytest.raises(ValueError):
        FractionalIntegralSpec("x", (0, 1), order=1.5)


def test_spec_object():
    spec = FractionalIntegralSpec("x", (0, 1))
    assert spec.evaluate() == pytest.approx(4 / (3 * SQRT_PI), abs=1e-12)
    with pytest.raises(NotImplementedError):
        FractionalIntegralSpec("x", (0, 1), order=0.3).evaluate()


def test_matches_weighted_quadpack():
    # QUADPACK's algebraic-weight rule handles (b - t)^(-1/2) without substitution
    for source, f in [("exp(x)*cos(3*x)", lambda t: math.exp(t) * math.cos(3 * t)), ("x^4 - x", lambda t: t**4 - t)]:
        ref, _ = integrate.quad(f, -1.0, 2.5, weight="alg", wvar=(0, -0.5), epsabs=1e-14, epsrel=1e-14)
        got = riemann_liouville_half_integral(source, Interval(-1, 2.5))
        assert got == pytest.approx(ref / SQRT_PI, abs=1e-10)


@given(st.integers(0, 5), st.floats(0.05, 10))
def test_monomials_match_beta_route(k, x):
    # on [0, x]: integral (x - t)^(-1/2) t^k dt = beta(-1/2, k, x)
    expected = beta_integral_closed_form(-0.5, k, x) / gamma(0.5)
    got = riemann_liouville_half_integral(f"x^{k}", Interval(0, x))
    assert got == pytest.approx(expected, abs=1e-8, rel=1e-12)


@given(st.lists(st.floats(-5, 5), min_size=1, max_size=6), intervals())
def test_substitution_agrees_with_graded_mesh(coefs, interval):
    source = " + ".join(f"({c!r})*x^{k}" for k, c in enumerate(coefs))
    a = riemann_liouville_half_integral(source, interval)
    b = half_integral_graded(source, interval)
    assert a == pytest.approx(b, abs=1e-6, rel=1e-10)
    assert a == pytest.approx(half_integral_polynomial(coefs, interval), abs=1e-8, rel=1e-12)


# --------------------------------------------------------------------------
# beta integral


@pytest.mark.parametrize(
    "d, p, x, expected",
    [(0, 0, 1, 1.0), (-0.5, 1, 1, 4 / 3), (1, 1, 2, 4 / 3)],
)
def test_beta_examples(d, p, x, expected):
    assert beta_integral_closed_form(d, p, x) == pytest.approx(expected, rel=1e-14)


def test_beta_example_by_direct_integration():
    # integral_0^2 (2 - y) y dy = [y^2 - y^3/3]_0^2 = 4 - 8/3
    assert 4 - 8 / 3 == pytest.approx(beta_integral_closed_form(1, 1, 2), rel=1e-15)


@pytest.mark.parametrize("d, p", [(-1, 0), (0, -1), (-2, 1)])
def test_beta_rejects_divergent(d, p):
    with pytest.raises(ValueError):
        beta_integral_closed_form(d, p, 1.0)


# --------------------------------------------------------------------------
# bridge to the corrected integral


@pytest.mark.parametrize("interval, expected", [((0, 9), 3.0), ((0, 1), 1.0), ((2, 11), 3.0)])
def test_bridge_examples(interval, expected):
    assert corrected_vs_fractional_bridge(Interval(*interval)) == pytest.approx(expected, abs=1e-14)


@given(intervals())
def test_bridge_identity(interval):
    root = math.sqrt(interval.length)
    assert abs(corrected_vs_fractional_bridge(interval) - root) <= 1e-10
    assert abs(corrected_vs_fractional_bridge(interval) - corrected_integral_closed_form(1, interval)) <= 1e-10
    assert abs(rescaled_half_integral("1", interval) - root) <= 1e-8


def test_bridge_is_specific_to_constants():
    rescaled = 0.5 * gamma(0.5) * half_integral_polynomial("x", Interval(0, 1))
    corrected = corrected_integral_closed_form("x", Interval(0, 1))
    assert rescaled == pytest.approx(2 / 3, abs=1e-14)
    assert abs((rescaled - corrected) - 1 / 6) <= 1e-8
    assert abs((rescaled_half_integral("x", Interval(0, 1)) - corrected) - 1 / 6) <= 1e-8


def test_gauss_legendre_exactness():
    # 8 nodes per panel integrate degree 15 exactly
    got = gauss_legendre(lambda x: x**15 - 3 * x**2, -1.0, 2.0, points=8, panels=1)
    assert got == pytest.approx((2**16 - 1) / 16 - (8 + 1), rel=1e-13)
