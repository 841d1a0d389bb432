"""Melzak-type infinite products, unit-circle polylogarithms and reflection formulas.

Complex numbers appear only in this module.  Branches are principal,
and ``tan(pi x) > 0`` on the interval where the polylogarithmic form is used.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .constants import catalan_constant
from .errors import DomainError, UnsupportedError
from .exactcomb import bernoulli_number
from .gammas import log_barnes_g, log_multiple_gamma
from .hurwitz import hurwitz_zeta

__all__ = [
    "melzak_product",
    "melzak_squared_product",
    "polylog_unit_circle",
    "corollary_product",
    "barnes_reflection",
    "gamma3_reflection",
    "gamma3_reflection_sides",
    "catalan_constant",
    "ReflectionSides",
]

_CLAUSEN_TERMS = 40


@lru_cache(maxsize=None)
def _zeta3() -> float:
    return hurwitz_zeta(3.0, 1.0)


def melzak_product(x: float) -> float:
    """``lim prod_{k=1}^{2N} (1 + 2x/k)^(-k (-1)^k)`` for ``x > -1/2``.

    Equals ``e^-x Gamma(x+1/2)/Gamma(1/2) (G(x+1/2) / (G(x+1) G(1/2)))^2``.
    """
    x = float(x)
    if not x > -0.5:
        raise DomainError("the product needs x > -1/2")
    log_value = math.fsum(
        [
            -x,
            log_multiple_gamma(1, x + 0.5),
            -0.5 * math.log(math.pi),
            2 * log_barnes_g(x + 0.5),
            -2 * log_barnes_g(x + 1),
            -2 * log_barnes_g(0.5),
        ]
    )
    return math.exp(log_value)


def _cos_over_1m4x2(x: float) -> float:
    """``cos(pi x) / (1 - 4 x^2)``, continuous through ``x = +-1/2``."""
    u = 0.5 - abs(x)
    if u == 0.0:
        return math.pi / 4
    return math.sin(math.pi * u) / (2 * u * (1 + 2 * abs(x)))


def _squared_factor_log(x: float, k: int) -> float:
    """``log |(1 - 4x^2/k^2)^(-k^2 (-1)^k)|``."""
    return -(k * k) * (-1) ** k * math.log(abs(1 - 4 * x * x / (k * k)))


def _squared_factor_sign(x: float, k: int) -> int:
    base = 1 - 4 * x * x / (k * k)
    return -1 if base < 0 and (k * k) % 2 else 1


def _squared_core(x: float) -> float:
    """``log`` of the ``G`` and ``Gamma_3`` part together with the exponential."""
    return math.fsum(
        [
            2 * x * x,
            7 * _zeta3() / (2 * math.pi**2),
            4 * (log_barnes_g(1 + x) + log_barnes_g(1 - x)),
            8 * (log_multiple_gamma(3, 1 - x) + log_multiple_gamma(3, 1 + x)),
            -8 * (log_multiple_gamma(3, 1.5 - x) + log_multiple_gamma(3, 1.5 + x)),
        ]
    )


def melzak_squared_product(x: float, start_index: int = 1) -> float:
    """``lim prod_{k=start}^{2N} (1 - 4x^2/k^2)^(-k^2 (-1)^k)`` for ``|x| < 1``.

    The full product equals
    ``cos(pi x)/pi exp(2x^2 + 7 zeta(3)/(2 pi^2)) (G(1+x) G(1-x))^4
    (Gamma_3(1-x) Gamma_3(1+x) / (Gamma_3(3/2-x) Gamma_3(3/2+x)))^8``.
    At ``x = +-1/2`` the ``k = 1`` factor vanishes, so ``start_index >= 2``
    is required there; the quotient is then taken through its limit.
    """
    x = float(x)
    if not abs(x) < 1:
        raise DomainError("the product is implemented for |x| < 1")
    if start_index < 1:
        raise DomainError("start_index must be at least 1")
    if abs(x) == 0.5 and start_index == 1:
        raise DomainError("the k = 1 factor vanishes at x = +-1/2; start the product at k = 2")
    core = _squared_core(x)
    if start_index == 1:
        return math.cos(math.pi * x) / math.pi * math.exp(core)
    # drop k = 1 analytically, then divide out 2 <= k < start_index
    logs = [core] + [-_squared_factor_log(x, k) for k in range(2, start_index)]
    sign = 1
    for k in range(2, start_index):
        sign *= _squared_factor_sign(x, k)
    return sign * _cos_over_1m4x2(x) / math.pi * math.exp(math.fsum(logs))


# -- polylogarithms on the unit circle --------------------------------------------


@lru_cache(maxsize=None)
def _clausen_coeffs() -> tuple[float, ...]:
    # |B_2k| / (2k (2k+1)!)
    return tuple(
        float(abs(bernoulli_number(2 * k)) / (2 * k * math.factorial(2 * k + 1)))
        for k in range(1, _CLAUSEN_TERMS + 1)
    )


def _clausen2(theta: float) -> float:
    """``sum sin(n theta)/n^2`` for ``|theta| <= pi``."""
    if theta == 0.0:
        return 0.0
    t2 = theta * theta
    acc = [theta - theta * math.log(abs(theta))]
    p = theta
    for c in _clausen_coeffs():
        p *= t2
        acc.append(c * p)
        if abs(c * p) < 1e-18:
            break
    return math.fsum(acc)


def _clausen3_cos(theta: float) -> float:
    """``sum cos(n theta)/n^3`` for ``|theta| <= pi``."""
    if theta == 0.0:
        return _zeta3()
    t2 = theta * theta
    acc = [_zeta3(), -0.75 * t2, 0.5 * t2 * math.log(abs(theta))]
    p = t2
    for k, c in enumerate(_clausen_coeffs(), start=1):
        p *= t2
        # integrating the Cl_2 series once more brings a factor 1/(2k+2)
        term = c * p / (2 * k + 2)
        acc.append(-term)
        if abs(term) < 1e-18:
            break
    return math.fsum(acc)


def _reduce(theta: float) -> float:
    """Representative of ``theta`` in ``(-pi, pi]``."""
    t = math.remainder(theta, 2 * math.pi)
    return math.pi if t == -math.pi else t


def polylog_unit_circle(k: int, theta: float) -> tuple[float, float]:
    """``Li_k(e^(i theta))`` as ``(real, imag)`` for ``k`` in {2, 3}.

    The Bernoulli-polynomial parts (``Re Li_2`` and ``Im Li_3``) are exact
    polynomials in ``theta``; the Clausen parts use their small-angle series
    after reduction to ``[-pi, pi]``.
    """
    if k not in (2, 3):
        raise UnsupportedError("polylog_unit_circle supports k = 2 and k = 3")
    t = _reduce(float(theta))
    a = abs(t)  # in [0, pi]
    s = 1.0 if t >= 0 else -1.0
    if k == 2:
        re = math.pi**2 / 6 - a * (2 * math.pi - a) / 4
        return re, _clausen2(t)
    im = s * (math.pi**2 * a / 6 - math.pi * a * a / 4 + a**3 / 12)
    return _clausen3_cos(t), im


def _li(k: int, theta: float) -> complex:
    re, im = polylog_unit_circle(k, theta)
    return complex(re, im)


# -- polylogarithmic form and reflection formulas ---------------------------------


def corollary_product(x: float, start_index: int = 1) -> float:
    """Squared Melzak product through its polylogarithmic form, ``0 < x <= 1/2``.

    ``tan(pi x)^(-4x^2) exp[2x^2 (1 + pi i) + 7 zeta(3)/(2 pi^2)
    + (4 i x / pi)(Li_2(w) - Li_2(-w)) - (2/pi^2)(Li_3(w) - Li_3(-w))]``
    with ``w = exp(2 pi i x)``.  The imaginary part of the exponent is
    checked to vanish modulo ``2 pi``.  At ``x = 1/2`` only ``start_index >= 2``
    is meaningful; the ``k = 1`` factor is divided out via
    ``tan(pi x)^(-4x^2) / (1 - 4x^2) -> pi/4``.
    """
    x = float(x)
    if not 0 < x <= 0.5:
        raise DomainError("corollary_product needs 0 < x <= 1/2")
    if start_index < 1:
        raise DomainError("start_index must be at least 1")
    if x == 0.5 and start_index == 1:
        raise DomainError("the k = 1 factor vanishes at x = 1/2; start the product at k = 2")
    theta = 2 * math.pi * x
    d2 = _li(2, theta) - _li(2, theta + math.pi)
    d3 = _li(3, theta) - _li(3, theta + math.pi)
    expo = (
        2 * x * x * complex(1, math.pi)
        + 7 * _zeta3() / (2 * math.pi**2)
        + 4j * x / math.pi * d2
        - 2 / math.pi**2 * d3
    )
    winding = expo.imag / (2 * math.pi)
    if abs(winding - round(winding)) > 1e-9:
        raise ArithmeticError(f"imaginary part of the exponent does not cancel: {expo.imag}")
    logs = [expo.real]
    if x == 0.5:
        lead = math.pi / 4
    else:
        lead = math.tan(math.pi * x) ** (-4 * x * x)
        if start_index >= 2:
            lead /= 1 - 4 * x * x
    logs += [-_squared_factor_log(x, k) for k in range(2, start_index)]
    return lead * math.exp(math.fsum(logs))


def _b2(z: float) -> float:
    return z * z - z + 1.0 / 6.0


def _b3(z: float) -> float:
    return z**3 - 1.5 * z * z + 0.5 * z


def barnes_reflection(z: float) -> complex:
    """``log(G(1+z)/G(1-z))`` from ``z log(pi/sin pi z) - (pi i/2) B_2(z) + (i/2pi) Li_2(e^(2 pi i z))``.

    Returned as a complex number; the imaginary part cancels.
    """
    z = float(z)
    if not 0 < z < 1:
        raise DomainError("barnes_reflection needs 0 < z < 1")
    return (
        z * math.log(math.pi / math.sin(math.pi * z))
        - 0.5j * math.pi * _b2(z)
        + 1j / (2 * math.pi) * _li(2, 2 * math.pi * z)
    )


@dataclass(frozen=True)
class ReflectionSides:
    lhs: float
    rhs: complex

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)


def gamma3_reflection_sides(z: float) -> ReflectionSides:
    """Both sides of the triple gamma reflection formula.

    ``2 log(Gamma_3(1+z) Gamma_3(1-z)) + log(G(1+z) G(1-z))`` against
    ``z^2 log(pi/sin pi z) - pi i z B_2(z) + (pi i/3) B_3(z) + (i z/pi) Li_2(w)
    - Li_3(w)/(2 pi^2) + zeta(3)/(2 pi^2)``, ``w = e^(2 pi i z)``.
    """
    z = float(z)
    if not 0 < z < 1:
        raise DomainError("gamma3_reflection needs 0 < z < 1")
    lhs = math.fsum(
        [
            2 * log_multiple_gamma(3, 1 + z),
            2 * log_multiple_gamma(3, 1 - z),
            log_barnes_g(1 + z),
            log_barnes_g(1 - z),
        ]
    )
    theta = 2 * math.pi * z
    rhs = (
        z * z * math.log(math.pi / math.sin(math.pi * z))
        - 1j * math.pi * z * _b2(z)
        + 1j * math.pi / 3 * _b3(z)
        + 1j * z / math.pi * _li(2, theta)
        - _li(3, theta) / (2 * math.pi**2)
        + _zeta3() / (2 * math.pi**2)
    )
    return ReflectionSides(lhs, rhs)


def gamma3_reflection(z: float) -> float:
    """Residual ``|lhs - rhs|`` of the triple gamma reflection formula."""
    return gamma3_reflection_sides(z).residual
