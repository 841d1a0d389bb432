"""Multiple zeta and multiple gamma functions.

Normalization: ``Gamma_1 = Gamma``, ``Gamma_n(1) = 1`` and
``Gamma_{n+1}(z+1) = Gamma_{n+1}(z) / Gamma_n(z)``, so ``Gamma_2 = 1/G`` with
``G`` the Barnes function.  In this normalization

    log Gamma_n(z) = 1/(n-1)! sum_k P_{k,n}(z) (zeta'(-k, z) - zeta'(-k))

and the inverse map is

    zeta'(-n, z) - zeta'(-n) = (-1)^n sum_k (-1)^k k! Q_{k,n}(z) log Gamma_{k+1}(z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError
from .exactcomb import stirling_cycle
from .hurwitz import hurwitz_zeta, riemann_zeta_deriv_neg, zeta_sderiv_neg
from .pqpoly import p_poly, q_poly

__all__ = [
    "RnConstant",
    "multiple_zeta",
    "r_n",
    "log_multiple_gamma",
    "log_barnes_g",
    "hurwitz_deriv_from_gammas",
    "glaisher_log",
]


@dataclass(frozen=True)
class RnConstant:
    n: int
    value: float


def _positive(z: float) -> float:
    z = float(z)
    if not z > 0 or not math.isfinite(z):
        raise DomainError(f"z must be a positive finite real, got {z}")
    return z


def _check_n(n: int, low: int = 1) -> int:
    if int(n) != n or n < low:
        raise ValueError(f"n must be an integer >= {low}, got {n}")
    return int(n)


def multiple_zeta(n: int, s: float, z: float) -> float:
    """``zeta_n(s, z) = sum_{k>=0} C(k+n-1, n-1) (k+z)^-s`` via Hurwitz zeta values."""
    n = _check_n(n)
    z = _positive(z)
    s = float(s)
    for j in range(n):
        if s - j == 1.0:
            raise PoleError(f"zeta_{n}(s, z) has a pole at s = {s}")
    zq = Fraction(z)
    terms = [float(p_poly(j, n)(zq)) * hurwitz_zeta(s - j, z) for j in range(n)]
    return math.fsum(terms) / math.factorial(n - 1)


def r_n(n: int) -> RnConstant:
    """``R_n = 1/(n-1)! sum_k [n, k+1] zeta'(-k)``."""
    n = _check_n(n)
    terms = [stirling_cycle(n, k + 1) * riemann_zeta_deriv_neg(k) for k in range(n)]
    return RnConstant(n, math.fsum(terms) / math.factorial(n - 1))


def log_multiple_gamma(n: int, z: float) -> float:
    """``log Gamma_n(z)`` for real ``z > 0``."""
    n = _check_n(n)
    z = _positive(z)
    zq = Fraction(z)
    terms = [
        float(p_poly(k, n)(zq)) * (zeta_sderiv_neg(k, z) - riemann_zeta_deriv_neg(k))
        for k in range(n)
    ]
    return math.fsum(terms) / math.factorial(n - 1)


def log_barnes_g(z: float) -> float:
    """``log G(z)`` for real ``z > 0``."""
    return -log_multiple_gamma(2, z)


def hurwitz_deriv_from_gammas(n: int, z: float) -> float:
    """``zeta'(-n, z) - zeta'(-n)`` rebuilt from ``log Gamma_1 .. log Gamma_{n+1}``."""
    n = _check_n(n, low=0)
    z = _positive(z)
    zq = Fraction(z)
    terms = [
        (-1) ** k * math.factorial(k) * float(q_poly(k, n)(zq)) * log_multiple_gamma(k + 1, z)
        for k in range(n + 1)
    ]
    return (-1) ** n * math.fsum(terms)


def glaisher_log() -> float:
    """``log A = 1/12 - zeta'(-1)`` for the Glaisher-Kinkelin constant ``A``."""
    return 1.0 / 12.0 - riemann_zeta_deriv_neg(1)
