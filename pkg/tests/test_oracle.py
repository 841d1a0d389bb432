import math
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest

from multigamma.errors import DomainError, OracleError
from multigamma.oracle import (
    extrapolate,
    finite_difference_sderiv,
    partial_product_extrapolated,
    partial_sum_extrapolated,
    polylog_boundary_series,
)
from multigamma.seriesengine import dilcher_spec
from multigamma.specs import ProductSpec
from multigamma.sparser import parse_series

TELESCOPE = parse_series("sum(k=1..inf, log(k) - 2*log(k+1) + log(k+2))")


def test_d1_report():
    rep = partial_sum_extrapolated(dilcher_spec(1), N=512, levels=3)
    assert abs(rep.extrapolated - math.log(2 / math.pi)) <= 1e-9
    assert 0 <= rep.estimated_error <= 1e-7
    assert (rep.N, rep.levels) == (512, 3)
    assert abs(rep.raw_value_at_N - rep.extrapolated) > rep.estimated_error


def test_telescoping_report():
    rep = partial_sum_extrapolated(TELESCOPE, N=512, levels=3)
    assert abs(rep.extrapolated - math.log(0.5)) <= 1e-10
    # the tail log(1 + 1/(N+1)) is a pure power series, so more levels drive the estimate down
    assert partial_sum_extrapolated(TELESCOPE, N=512, levels=5).estimated_error <= 1e-12


def test_inverse_squares_by_extrapolation():
    # sum 1/k^2 with a 1/N tail basis; pi^2/6 to 1e-10
    nodes = [512 * 2**l for l in range(5)]
    k = np.arange(1, nodes[-1] + 1, dtype=float)
    csum = np.cumsum(1 / k**2)
    sums = [float(csum[n - 1]) for n in nodes]
    value, _ = extrapolate(nodes, sums, [(-1.0, 0), (-2.0, 0), (-3.0, 0), (-4.0, 0)], 4)
    assert abs(value - math.pi**2 / 6) <= 1e-10


def test_refuses_divergent():
    with pytest.raises(OracleError):
        partial_sum_extrapolated(parse_series("sum(k=1..inf, log(k))"))


def test_argument_checks():
    with pytest.raises(ValueError):
        partial_sum_extrapolated(TELESCOPE, N=32)
    with pytest.raises(ValueError):
        partial_sum_extrapolated(TELESCOPE, N=512, levels=6)
    with pytest.raises(ValueError):
        partial_sum_extrapolated(TELESCOPE, N=2**18, levels=5)


def test_overflow_detected():
    from multigamma.oracle import _checkpoint_sums

    with pytest.raises(OverflowError):
        _checkpoint_sums(np.array([1e308, 1e308, 1.0]), [1, 3])


def test_error_shrinks_with_levels():
    for spec in (dilcher_spec(1), dilcher_spec(2)):
        errs = [partial_sum_extrapolated(spec, N=256, levels=l).estimated_error for l in (1, 2, 3)]
        assert errs[0] > errs[1] > errs[2]


def test_melzak_oracle():
    rep = partial_product_extrapolated(ProductSpec("melzak_linear", F(1)), N=1024, levels=3)
    assert abs(rep.extrapolated - math.pi / (2 * math.e)) <= 1e-6
    assert rep.estimated_error <= 1e-6


def test_squared_oracle_quarter():
    rep = partial_product_extrapolated(ProductSpec("melzak_squared", F(1, 4)), N=1024, levels=3)
    cat, z3 = float(mpmath.catalan), float(mpmath.zeta(3))
    assert abs(rep.extrapolated - math.exp(1 / 8 - 2 * cat / math.pi + 7 * z3 / (2 * math.pi**2))) <= 1e-5


def test_product_zero_factor():
    with pytest.raises(DomainError):
        partial_product_extrapolated(ProductSpec("melzak_squared", F(1, 2)), N=64, levels=1)
    with pytest.raises(DomainError):
        partial_product_extrapolated(ProductSpec("melzak_linear", F(-1, 2)), N=64, levels=1)


def test_deterministic():
    a = partial_sum_extrapolated(dilcher_spec(2), N=256, levels=3)
    b = partial_sum_extrapolated(dilcher_spec(2), N=256, levels=3)
    assert a == b


# finite differences ------------------------------------------------------------------


def test_fd_zeta_prime_values():
    assert abs(finite_difference_sderiv(0, 1.0) + math.log(2 * math.pi) / 2) <= 1e-9
    log_a = float(mpmath.log(mpmath.glaisher))
    assert abs(finite_difference_sderiv(1, 1.0) - (1 / 12 - log_a)) <= 1e-9
    assert abs(finite_difference_sderiv(0, 2.0) - finite_difference_sderiv(0, 1.0)) <= 1e-10


@pytest.mark.parametrize("order", [1, 2])
@pytest.mark.parametrize("lam, z", [(0, 0.5), (1, 3.0), (2, 1.0)])
def test_fd_vs_mpmath(order, lam, z):
    ref = float(mpmath.zeta(-lam, z, order))
    assert abs(finite_difference_sderiv(lam, z, order) - ref) <= 1e-8 * max(1, abs(ref))


def test_fd_rejects():
    with pytest.raises(DomainError):
        finite_difference_sderiv(0, 0.0)
    with pytest.raises(ValueError):
        finite_difference_sderiv(0, 1.0, 5)


# polylog reference ------------------------------------------------------------------------


@pytest.mark.parametrize("theta", [1e-3, 0.5, 2.0, math.pi])
def test_boundary_series_vs_mpmath(theta):
    ref = complex(mpmath.polylog(2, mpmath.expjpi(theta / mpmath.pi)))
    assert abs(polylog_boundary_series(2, theta) - ref) <= 1e-10


def test_boundary_series_limits():
    assert abs(polylog_boundary_series(2, 0.0) - math.pi**2 / 6) <= 1e-12
    with pytest.raises(ValueError):
        polylog_boundary_series(1, 1.0)
