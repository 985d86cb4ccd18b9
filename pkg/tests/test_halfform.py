import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqrtdx.expression import parse_expression
from sqrtdx.halfform import (
    HalfDensity,
    HalfForm,
    corrected_integral_map,
    evaluate_half_density,
    norm_squared,
    ordinary_integral,
    tensor_square,
)
from sqrtdx.quadrature import Interval

nonzero = st.floats(1e-6, 1e6).flatmap(lambda v: st.sampled_from([v, -v]))
complexes = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


@st.composite
def intervals(draw):
    a = draw(st.floats(-10, 10))
    return Interval(a, a + draw(st.floats(0.1, 10)))


@pytest.mark.parametrize("base, frame, expected", [(1, 4, 2), (1, 1, 1), (2 + 0j, -9, 6)])
def test_evaluate_examples(base, frame, expected):
    assert evaluate_half_density(HalfDensity(base), frame) == expected


def test_zero_is_not_a_frame():
    with pytest.raises(ValueError):
        evaluate_half_density(HalfDensity(1), 0)
    with pytest.raises(ValueError):
        HalfDensity(1).act(0)


@given(complexes, nonzero, nonzero)
def test_cocycle(base, s, t):
    nu = HalfDensity(base)
    lhs = nu(s * t)
    rhs = nu.act(s)(t)
    assert abs(lhs - rhs) <= 1e-15 * abs(lhs) + 1e-300


@given(complexes, nonzero)
def test_equivariance_against_frame_one(base, s):
    nu = HalfDensity(base)
    assert cmath.isclose(nu(s), nu(1.0) * math.sqrt(abs(s)), rel_tol=1e-15)


@pytest.mark.parametrize(
    "source, squared",
    [("1", "1^2"), ("x", "x^2"), ("3", "3^2")],
)
def test_tensor_square(source, squared):
    one = tensor_square(HalfForm(source, (0, 1)))
    assert one.coefficient == parse_expression(squared)
    assert one.interval == Interval(0, 1)


def test_norm_examples():
    assert norm_squared(HalfForm("1", (2, 5))) == 3.0
    assert norm_squared(HalfForm("x", (0, 1))) == pytest.approx(1 / 3, rel=1e-15)
    assert norm_squared(HalfForm("0", (-4, 7))) == 0.0


@given(intervals())
def test_norm_of_unit_form_is_length_exactly(interval):
    assert norm_squared(HalfForm("1", interval)) == interval.b - interval.a


def test_map_examples():
    sigma = HalfForm("1", (0, 9))
    value = corrected_integral_map(sigma)
    assert value == pytest.approx(3.0, abs=1e-12)
    assert value**2 == pytest.approx(norm_squared(sigma), abs=1e-9)
    assert corrected_integral_map(HalfForm("1", (2, 11))) == pytest.approx(3.0, abs=1e-12)
    sigma = HalfForm("x", (0, 1))
    value = corrected_integral_map(sigma)
    assert value == pytest.approx(0.5, abs=1e-9)
    assert abs(value**2 - norm_squared(sigma)) == pytest.approx(1 / 3 - 1 / 4, abs=1e-8)


@given(st.floats(0.01, 100), intervals())
def test_square_root_contract_on_constants(c, interval):
    sigma = HalfForm(repr(c), interval)
    assert corrected_integral_map(sigma) ** 2 == pytest.approx(norm_squared(sigma), abs=1e-9, rel=1e-12)


@pytest.mark.parametrize("source", ["x^3 - 2*x", "sin(x)", "exp(x/3)", "abs(x - 0.3)"])
def test_tensor_norm_compatibility(source):
    sigma = HalfForm(source, (-1, 2))
    one = tensor_square(sigma)
    direct = ordinary_integral(one.coefficient, one.interval)
    assert norm_squared(sigma) == pytest.approx(direct, abs=1e-9)


def test_nonpolynomial_norm_against_closed_form():
    # integral_0^pi sin^2 = pi/2
    assert norm_squared(HalfForm("sin(x)", (0, math.pi))) == pytest.approx(math.pi / 2, abs=1e-12)


@pytest.mark.parametrize("f, g", [("x", "x^2"), ("sin(x)", "1"), ("exp(x)", "-3*x^4")])
def test_map_linearity(f, g):
    i = Interval(-0.5, 1.5)
    total = corrected_integral_map(HalfForm(f, i) + HalfForm(g, i))
    parts = corrected_integral_map(HalfForm(f, i)) + corrected_integral_map(HalfForm(g, i))
    assert total == pytest.approx(parts, abs=1e-8)


def test_adding_across_intervals_fails():
    with pytest.raises(ValueError):
        HalfForm("x", (0, 1)) + HalfForm("x", (0, 2))


def test_scale():
    sigma = HalfForm("x", (0, 4)).scale(3)
    assert corrected_integral_map(sigma) == pytest.approx(3 * 8 / 2, abs=1e-9)
