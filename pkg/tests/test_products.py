import cmath
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from multigamma import (
    barnes_reflection,
    catalan_constant,
    corollary_product,
    gamma3_reflection,
    glaisher_log,
    hurwitz_zeta,
    log_barnes_g,
    melzak_product,
    melzak_squared_product,
    polylog_unit_circle,
)
from multigamma.errors import DomainError, UnsupportedError
from multigamma.oracle import partial_product_extrapolated, partial_product_log, polylog_boundary_series
from multigamma.products import gamma3_reflection_sides
from multigamma.specs import ProductSpec

ZETA3 = float(mpmath.zeta(3))
CAT = float(mpmath.catalan)
LOG_A = float(mpmath.log(mpmath.glaisher))


def _oracle(kind, x, start=1):
    return partial_product_extrapolated(ProductSpec(kind, Fraction(x), start), N=1024, levels=3).extrapolated


# linear Melzak product -------------------------------------------------------


def test_melzak_one():
    assert abs(melzak_product(1.0) - math.pi / (2 * math.e)) <= 1e-9


def test_melzak_particular_cases():
    a = math.exp(LOG_A)
    assert math.isclose(melzak_product(0.5), a**6 / (math.e * math.sqrt(math.pi) * 2 ** (1 / 6)), rel_tol=1e-8)
    assert math.isclose(melzak_product(2.0), 3 * math.pi**2 / (16 * math.e**2), rel_tol=1e-8)
    want = a**3 * math.exp(-CAT / math.pi) * math.sqrt(math.pi) * 2 ** (1 / 6) / math.gamma(0.25)
    assert math.isclose(melzak_product(-0.25), want, rel_tol=1e-8)


@pytest.mark.parametrize("x", [0.1, 0.25, 0.45, 1.0, 2.0])
def test_melzak_vs_product_oracle(x):
    assert abs(melzak_product(x) - _oracle("melzak_linear", x)) <= 1e-6


def test_parity_shift_factor():
    # one more factor, k = 2N+1 odd, pushes the partial product by ~e^(2x)
    x = 0.3
    spec = ProductSpec("melzak_linear", Fraction(3, 10))
    ratios = [math.exp(partial_product_log(spec, 2 * n + 1) - partial_product_log(spec, 2 * n)) for n in (4096, 8192)]
    assert abs(ratios[-1] - math.exp(2 * x)) <= 1e-3
    assert abs(ratios[-1] - math.exp(2 * x)) < abs(ratios[0] - math.exp(2 * x))


def test_melzak_domain():
    with pytest.raises(DomainError):
        melzak_product(-0.5)


# squared Melzak product ----------------------------------------------------------


def test_squared_quarter():
    want = math.exp(1 / 8 - 2 * CAT / math.pi + 7 * ZETA3 / (2 * math.pi**2))
    assert math.isclose(melzak_squared_product(0.25), want, rel_tol=1e-7)


def test_squared_half_from_two():
    want = math.pi / 4 * math.exp(0.5 + 7 * ZETA3 / math.pi**2)
    assert math.isclose(melzak_squared_product(0.5, 2), want, rel_tol=1e-7)


def test_squared_zero_is_one():
    assert abs(melzak_squared_product(0.0) - 1) <= 1e-9


@pytest.mark.parametrize("x, start", [(0.25, 1), (0.1, 1), (0.5, 2), (0.7, 2), (0.3, 4)])
def test_squared_vs_product_oracle(x, start):
    assert abs(melzak_squared_product(x, start) - _oracle("melzak_squared", x, start)) <= 1e-5


@given(st.floats(-0.95, 0.95).filter(lambda x: abs(abs(x) - 0.5) > 1e-6))
def test_squared_is_even(x):
    assert math.isclose(melzak_squared_product(x), melzak_squared_product(-x), rel_tol=1e-10, abs_tol=1e-12)


def test_squared_vanishing_factor_needs_start():
    with pytest.raises(DomainError):
        melzak_squared_product(0.5)
    with pytest.raises(DomainError):
        melzak_squared_product(1.0)


# polylogarithmic form -------------------------------------------------------------


@pytest.mark.parametrize("x", [0.1, 0.25, 0.3, 0.45])
def test_corollary_agrees(x):
    assert abs(corollary_product(x) - melzak_squared_product(x)) <= 1e-7


def test_corollary_half_limit():
    assert math.isclose(corollary_product(0.5, 2), melzak_squared_product(0.5, 2), rel_tol=1e-9)


@given(st.floats(0.01, 0.49))
def test_corollary_property(x):
    assert math.isclose(corollary_product(x), melzak_squared_product(x), rel_tol=1e-9)


def test_corollary_domain():
    for x in (0.0, -0.1, 0.6):
        with pytest.raises(DomainError):
            corollary_product(x)
    with pytest.raises(DomainError):
        corollary_product(0.5)


# polylogarithms -----------------------------------------------------------------------


def test_polylog_special_values():
    li2 = complex(*polylog_unit_circle(2, math.pi / 2)) - complex(*polylog_unit_circle(2, -math.pi / 2))
    assert abs(li2 - 2j * CAT) <= 1e-9
    li3 = complex(*polylog_unit_circle(3, 0.0)) - complex(*polylog_unit_circle(3, math.pi))
    assert abs(li3 - 7 * ZETA3 / 4) <= 1e-10
    assert abs(complex(*polylog_unit_circle(2, 0.0)) - math.pi**2 / 6) <= 1e-10


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("theta", [0.001, 0.4, 1.0, 2.5, 3.1, -2.0, 7.0])
def test_polylog_vs_mpmath_and_boundary_series(k, theta):
    got = complex(*polylog_unit_circle(k, theta))
    ref = complex(mpmath.polylog(k, mpmath.expjpi(theta / mpmath.pi)))
    assert abs(got - ref) <= 1e-12
    assert abs(got - polylog_boundary_series(k, theta)) <= 1e-10


def test_polylog_unsupported_order():
    with pytest.raises(UnsupportedError):
        polylog_unit_circle(4, 1.0)


@given(st.floats(-10, 10))
def test_polylog_conjugate_symmetry(theta):
    for k in (2, 3):
        a = complex(*polylog_unit_circle(k, theta))
        b = complex(*polylog_unit_circle(k, -theta))
        assert abs(a - b.conjugate()) <= 1e-13


# reflection formulas -------------------------------------------------------------------


@pytest.mark.parametrize("z", [0.1, 0.25, 0.3, 0.5, 0.8])
def test_barnes_reflection(z):
    v = barnes_reflection(z)
    assert abs(v.real - (log_barnes_g(1 + z) - log_barnes_g(1 - z))) <= 1e-8
    assert abs(v.imag) <= 1e-9


def test_barnes_reflection_small_z():
    assert abs(barnes_reflection(1e-8)) <= 1e-6


@pytest.mark.parametrize("z", [0.25, 0.5, 0.7])
def test_gamma3_reflection(z):
    assert gamma3_reflection(z) <= 1e-7


def test_gamma3_reflection_small_z():
    # both sides go to zero: Li_3(1) cancels zeta(3)
    sides = gamma3_reflection_sides(1e-6)
    assert abs(sides.lhs) <= 1e-7 and abs(sides.rhs) <= 1e-7


def test_reflection_domains():
    for z in (0.0, 1.0, -0.2):
        with pytest.raises(DomainError):
            barnes_reflection(z)
        with pytest.raises(DomainError):
            gamma3_reflection(z)


# Catalan ------------------------------------------------------------------------------------


def test_catalan():
    assert abs(catalan_constant() - CAT) <= 1e-12
    assert abs(catalan_constant() - 0.9159655942) <= 1e-10
    im = (complex(*polylog_unit_circle(2, math.pi / 2)) - complex(*polylog_unit_circle(2, -math.pi / 2))).imag
    assert abs(2 * catalan_constant() - im) <= 1e-9


def test_zeta3_consistency():
    assert abs(hurwitz_zeta(3.0, 1.0) - ZETA3) <= 1e-14
    assert abs(glaisher_log() - LOG_A) <= 1e-10
