"""Generalized Stirling polynomials ``P_{k,n}(z)`` and ``Q_{k,n}(z)``.

``P_{k,n}`` carries the multiple zeta function into Hurwitz zeta values and
``log Gamma_n`` into Hurwitz derivatives; ``Q_{k,n}`` goes the other way.
The two families are discretely orthogonal, which is what makes the
round trip exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactcomb import (
    Rational,
    RationalPolynomial,
    falling_binomial_poly,
    stirling_cycle,
    stirling_subset,
)

__all__ = [
    "p_poly",
    "p_poly_binomial_form",
    "p_poly_derivative_form",
    "q_poly",
    "orthogonality_sum",
    "orthogonality_poly",
]


@lru_cache(maxsize=None)
def p_poly(k: int, n: int) -> RationalPolynomial:
    """``P_{k,n}(z) = sum_{j=k+1}^{n} (-z)^(j-k-1) C(j-1, k) [n, j]``.

    Defined for ``0 <= k <= n - 1``; ``k >= n`` is rejected because the empty
    sum would silently give the zero polynomial.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"p_poly needs n >= 1 and 0 <= k <= n-1, got k={k}, n={n}")
    coeffs = [Fraction(0)] * (n - k)
    for j in range(k + 1, n + 1):
        e = j - k - 1
        coeffs[e] += (-1) ** e * comb(j - 1, k) * stirling_cycle(n, j)
    return RationalPolynomial(coeffs)


def p_poly_binomial_form(k: int, n: int) -> RationalPolynomial:
    """Binomial form ``sum_{i=k+1}^{n} (-1)^(n-i) C(z, n-i) (n-1)!/(i-1)! [i, k+1]``.

    ``C(z, m)`` is the falling-factorial polynomial divided by ``m!``.  The
    sign comes from the Vandermonde split of ``(x + 1 - z)_{n-1}``; without it
    the value at ``z = 1`` would not reduce to ``[n-1, k]``.  Must coincide
    with :func:`p_poly`.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"needs n >= 1 and 0 <= k <= n-1, got k={k}, n={n}")
    acc = RationalPolynomial()
    for i in range(k + 1, n + 1):
        w = (-1) ** (n - i) * Fraction(factorial(n - 1), factorial(i - 1)) * stirling_cycle(i, k + 1)
        acc = acc + falling_binomial_poly(n - i) * w
    return acc


def p_poly_derivative_form(k: int, n: int) -> RationalPolynomial:
    """``(-1)^k/k! d^(n-1)/dy^(n-1) [log^k(1-y) (1-y)^(z-1)]`` at ``y = 0``.

    Computed with truncated power series in ``y`` whose coefficients are
    polynomials in ``z``.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"needs n >= 1 and 0 <= k <= n-1, got k={k}, n={n}")
    order = n  # coefficients of y^0 .. y^(n-1)
    z_minus_1 = RationalPolynomial([-1, 1])
    # (1-y)^(z-1) = sum_m (-1)^m C(z-1, m) y^m
    series = [falling_binomial_poly(m).compose(z_minus_1) * (-1) ** m for m in range(order)]
    log_series = [RationalPolynomial()] + [RationalPolynomial([Fraction(-1, i)]) for i in range(1, order)]
    for _ in range(k):
        prod = [RationalPolynomial() for _ in range(order)]
        for i, a in enumerate(series):
            if not a.coeffs:
                continue
            for j in range(1, order - i):
                prod[i + j] = prod[i + j] + a * log_series[j]
        series = prod
    return series[n - 1] * Fraction((-1) ** k * factorial(n - 1), factorial(k))


@lru_cache(maxsize=None)
def q_poly(k: int, n: int) -> RationalPolynomial:
    """``Q_{k,n}(z) = sum_{j=k}^{n} (1-z)^(n-j) C(n, j) {j, k}``."""
    if not 0 <= k <= n:
        raise ValueError(f"q_poly needs 0 <= k <= n, got k={k}, n={n}")
    one_minus_z = RationalPolynomial([1, -1])
    acc = RationalPolynomial()
    for j in range(k, n + 1):
        acc = acc + (one_minus_z ** (n - j)) * (comb(n, j) * stirling_subset(j, k))
    return acc


def orthogonality_poly(k: int, n: int) -> RationalPolynomial:
    """``sum_{j=k}^{n-1} (-1)^(j-k) Q_{k,j}(z) P_{j,n}(z)`` as a polynomial.

    Identically ``1`` when ``k = n - 1`` and identically ``0`` otherwise.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"needs 0 <= k <= n-1, got k={k}, n={n}")
    acc = RationalPolynomial()
    for j in range(k, n):
        acc = acc + q_poly(k, j) * p_poly(j, n) * (-1) ** (j - k)
    return acc


def orthogonality_sum(k: int, n: int, z: Rational) -> Fraction:
    """Orthogonality sum evaluated exactly at a rational point ``z``."""
    z = Fraction(z)
    return sum(
        ((-1) ** (j - k) * q_poly(k, j)(z) * p_poly(j, n)(z) for j in range(k, n)),
        Fraction(0),
    )
