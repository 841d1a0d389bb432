import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multigamma import (
    dilcher_sum,
    evaluate_series,
    parse_series,
    phi_regularized,
    prop1_expansion,
    stieltjes,
    zeta_kth_deriv_at0,
    zeta_power_series,
)
from multigamma.errors import DomainError, UnsupportedError
from multigamma.oracle import partial_sum_extrapolated
from multigamma.seriesengine import dilcher_spec, zeta_power_series_direct
from multigamma.specs import SeriesSpec, SeriesTerm

LOG2PI = math.log(2 * math.pi)


def _oracle(spec, N=512):
    return partial_sum_extrapolated(spec, N=N, levels=3).extrapolated


# Phi atoms -----------------------------------------------------------------------


def test_phi_log_k():
    res = phi_regularized(0, 0)
    assert not res.convergent
    assert abs(res.value - LOG2PI / 2) <= 1e-12
    got = {(p, b): c for p, b, c in res.divergent_profile.terms}
    assert got == {(1, 1): 1, (1, 0): -1, (0, 1): F(1, 2)}


@pytest.mark.parametrize("z", [F(0), F(1, 2), F(-1, 3), F(2)])
def test_phi_profile_matches_shifted_prop1(z):
    # partial sums to N end at zeta'(0, N + z + 1)
    res = phi_regularized(0, z)
    want = prop1_expansion(0, 3).shift(z + 1, 5, "N")
    assert res.divergent_profile == want.growing()


def test_phi_half_minus_zero():
    # log(k+1/2) - log(k) ~ 1/(2k), so the partial sums grow like (1/2) log N
    res = evaluate_series(SeriesSpec.create([(1, 0, F(1, 2), 1), (-1, 0, 0, 1)]))
    got = {(p, b): c for p, b, c in res.divergent_profile.terms}
    assert got == {(0, 1): F(1, 2)}


def test_phi_domain():
    with pytest.raises(DomainError):
        phi_regularized(0, -1)


# evaluate_series ------------------------------------------------------------------


def test_d1_spec():
    res = evaluate_series(dilcher_spec(1))
    assert res.convergent
    assert abs(res.value - math.log(2 / math.pi)) <= 1e-9


def test_telescoping():
    res = evaluate_series(parse_series("sum(k=1..inf, log(k) + log(k+2) - 2*log(k+1))"))
    assert res.convergent
    assert abs(res.value - math.log(0.5)) <= 1e-10


def test_log_k_diverges():
    res = evaluate_series(parse_series("sum(k=1..inf, log(k))"))
    assert not res.convergent
    assert res.divergent_profile.terms[0][:2] == (1, 1)


def test_limits():
    with pytest.raises(UnsupportedError):
        evaluate_series(SeriesSpec.create([(1, 0, 0, 5)]))
    with pytest.raises(DomainError):
        evaluate_series(SeriesSpec((SeriesTerm(0, F(-1), 1, F(1)),)))


CONVERGENT = [
    "sum(k=1..inf, log(k) - 2*log(k+1) + log(k+2))",
    "sum(k=1..inf, k^1*log(k) - 3*k^1*log(k+1/3) + 3*k^1*log(k+2/3) - k^1*log(k+1))",
    "sum(k=2..inf, log(k-1/2) - 2*log(k) + log(k+1/2))",
    "sum(k=1..inf, log^2(k+1/2) - 2*log^2(k) + log^2(k-1/2))",
    "sum(k=3..inf, log(k+1/4) - 2*log(k+1/2) + log(k+3/4))",
]


@pytest.mark.parametrize("text", CONVERGENT)
def test_convergent_vs_oracle(text):
    spec = parse_series(text)
    res = evaluate_series(spec)
    assert res.convergent
    assert abs(res.value - _oracle(spec)) <= 1e-7


def test_constant_term_value_is_consistent():
    res = evaluate_series(dilcher_spec(2))
    assert abs(res.constant_term.value - res.constant_term.evaluate()) <= 1e-12
    assert abs(res.zeta_form.evaluate() - res.value) <= 1e-10


_shift = st.sampled_from([F(0), F(1, 2), F(-1, 2), F(1, 3), F(2)])


@st.composite
def _series(draw):
    terms = draw(
        st.lists(
            st.tuples(st.integers(-3, 3).map(F), st.integers(0, 2), _shift, st.integers(1, 2)),
            min_size=1,
            max_size=3,
        )
    )
    return SeriesSpec.create(terms)


@settings(max_examples=25)
@given(_series(), _series(), st.integers(-3, 3), st.integers(1, 3))
def test_linearity(a, b, alpha, beta):
    ra, rb = evaluate_series(a), evaluate_series(b)
    combo = evaluate_series(a.scale(alpha) + b.scale(F(1, beta)))
    want = alpha * ra.value + rb.value / beta
    assert abs(combo.value - want) <= 1e-12 * max(1.0, abs(ra.value), abs(rb.value), abs(want)) * 10
    # profiles are exactly linear
    assert combo.divergent_profile == (ra.divergent_profile.scale(alpha) + rb.divergent_profile.scale(F(1, beta))).growing()


@settings(max_examples=25)
@given(_series())
def test_convergence_verdict_matches_profile(spec):
    res = evaluate_series(spec)
    assert res.convergent == (not res.divergent_profile.terms)
    assert all(p > 0 or b > 0 for p, b, _ in res.divergent_profile.terms)


# Dilcher sums ------------------------------------------------------------------------


def test_dilcher_cancellation_is_exact():
    for k in (1, 2, 3, 4):
        assert evaluate_series(dilcher_spec(k)).convergent


def test_d1():
    assert abs(dilcher_sum(1).value - math.log(2 / math.pi)) <= 1e-9


def test_d2_printed_expression():
    g0, g1 = stieltjes(0), stieltjes(1)
    want = math.pi**2 / 12 + math.log(math.pi) ** 2 - 3 * math.log(2) ** 2 - g0**2 - 2 * g1
    assert abs(dilcher_sum(2).value - want) <= 1e-7


def test_d3_printed_relation():
    d2 = dilcher_sum(2).value
    want = 3 * d2 * math.log(2) + 2 * zeta_kth_deriv_at0(3, 1.0) + 9 * LOG2PI * math.log(2) ** 2 + math.log(4) ** 3
    assert abs(dilcher_sum(3).value - want) <= 1e-6


@pytest.mark.parametrize("k", [1, 2])
def test_dilcher_vs_series_engine(k):
    assert abs(dilcher_sum(k).value - evaluate_series(dilcher_spec(k)).value) <= 1e-7


def test_d2_vs_oracle():
    assert abs(dilcher_sum(2).value - _oracle(dilcher_spec(2))) <= 1e-6


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dilcher_vs_mpmath_zeta_derivatives(k):
    # (-1)^k D_k / 2 = -log^k 2 - zeta^(k)(0) + sum_j C(k, j) zeta^(k-j)(0) log^j 2
    L = mpmath.log(2)
    rhs = -(L**k) - mpmath.zeta(0, 1, k) + sum(mpmath.binomial(k, j) * mpmath.zeta(0, 1, k - j) * L**j for j in range(1, k))
    assert abs(dilcher_sum(k).value - float(2 * (-1) ** k * rhs)) <= 1e-9


def test_dilcher_unsupported():
    with pytest.raises(UnsupportedError):
        dilcher_sum(5)
    with pytest.raises(UnsupportedError):
        dilcher_sum(0)


# zeta power series -----------------------------------------------------------------------


def test_power_series_zero():
    assert zeta_power_series(0.0, 1) == 0.0
    assert zeta_power_series(0.0, 3) == 0.0


@pytest.mark.parametrize("z", [0.3, 0.5, -0.4, 0.9, -0.9])
def test_barnes_power_series(z):
    assert abs(zeta_power_series(z, 1) - zeta_power_series_direct(z, 1)) <= 1e-10


@pytest.mark.parametrize("z", [1 / 3, -0.25, 0.7])
def test_triple_power_series(z):
    assert abs(zeta_power_series(z, 3) - zeta_power_series_direct(z, 3)) <= 1e-9


def test_power_series_vs_mpmath():
    z = 0.45
    ref = mpmath.nsum(lambda k: (-z) ** k * mpmath.zeta(k) / (k + 1), [2, mpmath.inf])
    assert abs(zeta_power_series(z, 1) - float(ref)) <= 1e-12


def test_power_series_domain():
    with pytest.raises(DomainError):
        zeta_power_series(1.0, 1)
    with pytest.raises(UnsupportedError):
        zeta_power_series(0.5, 4)
