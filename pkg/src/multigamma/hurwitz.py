"""Hurwitz zeta function and its s-derivatives in binary64.

The workhorse is Euler-Maclaurin summation after shifting ``z`` upward,

    zeta(s, z) = sum_{i<M} (z+i)^-s + zeta(s, w),    w = z + M,

with the tail written as ``w^(1-s)/(s-1) + w^-s/2 + sum_j B_2j/(2j)! (s)_{2j-1}
w^(-s-2j+1)``.  Every piece is a product of ``w^-s`` with a rational
function or polynomial in ``s``, so s-derivatives of any order are taken
analytically by the Leibniz rule instead of by finite differences.

For negative non-integer ``s`` the shifted head sum cancels badly against
the tail, so at small ``z`` the value comes from Hurwitz's Fourier series
on the fractional part of ``z`` instead.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .asymptotic import AsymptoticExpansion
from .errors import DomainError, PoleError, UnsupportedError
from .exactcomb import bernoulli_number, bernoulli_poly, pochhammer, stirling_cycle, stirling_subset

__all__ = [
    "hurwitz_zeta",
    "hurwitz_zeta_deriv",
    "prop1_expansion",
    "sderiv_expansion",
    "zeta_sderiv_neg",
    "zeta_kth_deriv_at0",
    "kth_deriv_asymptotic",
    "stieltjes",
    "riemann_zeta_deriv_neg",
]

_MAX_BERNOULLI = 60
# B_2j / (2j)!, index j
_BC = [0.0] + [
    float(bernoulli_number(2 * j) / factorial(2 * j)) for j in range(1, _MAX_BERNOULLI + 1)
]
_FOURIER_MAX_TERMS = 2**16


def _check_z(z: float) -> float:
    z = float(z)
    if not z > 0 or not math.isfinite(z):
        raise DomainError(f"z must be a positive finite real, got {z}")
    return z


def _shift_base(s: float) -> float:
    # Positive s: the Bernoulli terms start to grow once 2j ~ 2*pi*w - s, so
    # w must grow with s.  Negative s: a low base limits head/tail cancellation.
    if s >= 0:
        return 8.0 + 0.5 * s
    return 4.0 if s > -2 else 5.0


def _euler_maclaurin(s: float, z: float, order: int, wmin: float) -> float:
    M = max(0, math.ceil(wmin - z))
    if M:
        head = math.fsum((-math.log(z + i)) ** order * (z + i) ** (-s) for i in range(M))
    else:
        head = 0.0
    w = z + M
    L = math.log(w)
    t = s - 1.0
    # d^m/ds^m of w^(1-s)/(s-1)
    T0 = w ** (1 - s) * math.fsum(
        comb(order, i) * (-L) ** i * (-1) ** (order - i) * factorial(order - i) / t ** (order - i + 1)
        for i in range(order + 1)
    )
    T1 = 0.5 * (-L) ** order * w ** (-s)
    # d[m] = m-th derivative of (s)_{2j-1}, updated one linear factor at a time
    d = [0.0] * (order + 1)
    d[0] = 1.0

    def times_linear(a: float) -> None:
        for m in range(order, 0, -1):
            d[m] = a * d[m] + m * d[m - 1]
        d[0] *= a

    times_linear(s)
    pieces = [head, T0, T1]
    bound_total = abs(head) + abs(T0) + abs(T1)
    prev = math.inf
    for j in range(1, _MAX_BERNOULLI + 1):
        if j > 1:
            times_linear(s + 2 * j - 3)
            times_linear(s + 2 * j - 2)
        parts = [comb(order, i) * d[order - i] * (-L) ** i for i in range(order + 1)]
        scale = _BC[j] * w ** (-s - 2 * j + 1)
        mag = abs(scale) * math.fsum(abs(p) for p in parts)
        if mag > prev and j > 2:
            break
        pieces.append(scale * math.fsum(parts))
        prev = mag
        if mag <= 1e-17 * bound_total:
            break
    return math.fsum(pieces)


@lru_cache(maxsize=None)
def _subset_row(j: int, r_max: int) -> tuple[float, ...]:
    return tuple(float(stirling_subset(r, j)) for r in range(r_max + 1))


def _unit_phase(n: np.ndarray, a_hi: float, a_lo: float) -> np.ndarray:
    # n * a_hi is exact (a_hi has 26 fractional bits), so the reduction mod 1 loses nothing
    return 2 * math.pi * (np.mod(n * a_hi, 1.0) + n * a_lo)


def _backward_difference(t: float, m: float, j: int) -> float:
    """``j``-th backward difference of ``n^-t`` at ``n = m``, without subtraction.

    Uses ``(1 - i/m)^-t = sum_r (t)_r/r! (i/m)^r`` and
    ``sum_i (-1)^i C(j, i) i^r = (-1)^j j! {r, j}``.
    """
    r_max = j + 40
    row = _subset_row(j, r_max)
    c = 1.0
    for r in range(1, j + 1):
        c *= (t + r - 1) / r / m
    acc = 0.0
    for r in range(j, r_max + 1):
        if r > j:
            c *= (t + r - 1) / r / m
        term = c * row[r]
        acc += term
        if term < 1e-18 * acc:
            break
    return (-1) ** j * factorial(j) * acc * m ** (-t)


def _fourier_negative(s: float, z: float):
    """Hurwitz's formula on the fractional part, valid for ``s < 0``.

    ``zeta(s, a) = 2 Gamma(t) / (2 pi)^t Re[e^(i pi t/2) sum_n e^(-2 pi i n a) / n^t]``
    with ``t = 1 - s`` and ``0 < a <= 1``.  The sum runs directly to ``N`` and
    the tail is finished by summation by parts, which gains ``~1/(N |1 - w|)``
    per step, ``w = e^(-2 pi i a)``.  Returns None when ``a`` sits so close to
    an integer that ``N`` would have to be huge.
    """
    m = math.ceil(z) - 1
    a = z - m
    t = 1.0 - s
    if a == 1.0:
        total = complex(_euler_maclaurin(t, 1.0, 0, _shift_base(t)), 0.0)
    else:
        chord = 2 * math.sin(math.pi * min(a, 1 - a))
        N = max(1024, math.ceil(64 / chord))
        if N > _FOURIER_MAX_TERMS:
            return None
        a_hi = round(a * 2**26) / 2**26
        a_lo = a - a_hi
        n = np.arange(1, N + 1, dtype=float)
        ang = _unit_phase(n, a_hi, a_lo)
        mag = n ** (-t)
        re = math.fsum((np.cos(ang) * mag)[::-1].tolist())
        im = -math.fsum((np.sin(ang) * mag)[::-1].tolist())
        idx = np.arange(N + 1, N + 41, dtype=float)
        tail_ang = _unit_phase(idx, a_hi, a_lo)
        inv = 1.0 / (1.0 - complex(math.cos(2 * math.pi * a), -math.sin(2 * math.pi * a)))
        tail = 0j
        prev = math.inf
        for j in range(40):
            wp = complex(math.cos(tail_ang[j]), -math.sin(tail_ang[j]))
            term = wp * _backward_difference(t, N + 1.0 + j, j) * inv ** (j + 1)
            if abs(term) > prev:
                break
            tail += term
            prev = abs(term)
            if prev <= 1e-18 * (abs(re) + abs(im)):
                break
        total = complex(re, im) + tail
    # pi t / 2 reduced with t mod 4, which is exact
    half = math.pi * math.fmod(t, 4.0) / 2
    series = math.cos(half) * total.real - math.sin(half) * total.imag
    log_pref = math.log(2.0) + math.lgamma(t) - t * math.log(2 * math.pi)
    value = math.exp(log_pref) * series
    head = math.fsum((a + i) ** (-s) for i in range(m))
    return value - head


def _near_integer(s: float, z: float) -> float:
    """Taylor series ``sum_k (-d)^k (s)_k / k! zeta(s+k, n)`` about ``n = round(z)``."""
    n = round(z)
    d = z - n  # exact
    if n == 0:
        return z ** (-s) + _taylor_at(s, 1, d)
    return _taylor_at(s, n, d)


def _taylor_at(s: float, n: int, d: float) -> float:
    pieces = []
    c = 1.0
    for k in range(60):
        if k:
            c *= -d * (s + k - 1) / k
        term = c * hurwitz_zeta(s + k, float(n))
        pieces.append(term)
        if abs(term) <= 1e-18 * abs(math.fsum(pieces)):
            break
    return math.fsum(pieces)


def hurwitz_zeta(s: float, z: float) -> float:
    """``zeta(s, z) = sum_{k>=0} (k+z)^-s`` continued to all real ``s != 1``.

    Non-positive integer ``s`` is done exactly through ``-B_{n+1}(z)/(n+1)``.
    """
    s = float(s)
    z = _check_z(z)
    if s == 1.0:
        raise PoleError("zeta(s, z) has a pole at s = 1")
    if s <= 0 and s == int(s):
        n = int(-s)
        return float(-bernoulli_poly(n + 1)(Fraction(z)) / (n + 1))
    # at integer z near s = 0 the Fourier prefactor is a 0 * oo limit, and E-M is fine there
    if s < 0 and z < 6.0 - s and not (s > -0.5 and z == math.floor(z)):
        v = _fourier_negative(s, z)
        return v if v is not None else _near_integer(s, z)
    return _euler_maclaurin(s, z, 0, _shift_base(s))


def hurwitz_zeta_deriv(s: float, z: float, order: int = 1) -> float:
    """``d^order/ds^order zeta(s, z)`` by Euler-Maclaurin with exact s-derivatives.

    Accurate to roughly 1e-13 relative for ``s >= 0``.  For negative ``s`` the
    head/tail cancellation grows like ``w^(1-s)`` and the error grows with it.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if order == 0:
        return hurwitz_zeta(s, z)
    s = float(s)
    z = _check_z(z)
    if s == 1.0:
        raise PoleError("zeta(s, z) has a pole at s = 1")
    return _euler_maclaurin(s, z, order, _shift_base(s))


# -- asymptotic expansions in z -------------------------------------------


@lru_cache(maxsize=None)
def _pochhammer_poly_derivs(n: int, lam: int, upto: int) -> tuple[Fraction, ...]:
    """Derivatives 0..upto of ``(s)_n`` at ``s = -lam``."""
    # (s)_n = sum_k [n, k] s^k
    s0 = Fraction(-lam)
    out = []
    for m in range(upto + 1):
        acc = Fraction(0)
        for k in range(m, n + 1):
            c = stirling_cycle(n, k)
            if c:
                acc += c * Fraction(factorial(k), factorial(k - m)) * s0 ** (k - m)
        out.append(acc)
    return tuple(out)


def sderiv_expansion(lam: int, order: int, r: int) -> AsymptoticExpansion:
    """Large-``z`` expansion of ``d^order/ds^order zeta(s, z)`` at ``s = -lam``.

    Exact coefficients; ``r`` Bernoulli terms are kept, leaving
    ``O(z^(lam - 2r - 1) log^order z)``.
    """
    if lam < 0 or order < 0 or r < 0:
        raise ValueError("lam, order and r must be non-negative")
    p = Fraction(lam)
    terms: list[tuple[Fraction, int, Fraction]] = []
    # w^(1-s)/(s-1): s - 1 = -(lam + 1)
    for i in range(order + 1):
        c = -comb(order, i) * (-1) ** i * Fraction(factorial(order - i), (lam + 1) ** (order - i + 1))
        terms.append((p + 1, i, c))
    terms.append((p, order, Fraction((-1) ** order, 2)))
    for j in range(1, r + 1):
        bc = bernoulli_number(2 * j) / factorial(2 * j)
        d = _pochhammer_poly_derivs(2 * j - 1, lam, order)
        for i in range(order + 1):
            c = bc * comb(order, i) * d[order - i] * (-1) ** i
            terms.append((p + 1 - 2 * j, i, c))
    return AsymptoticExpansion("z", tuple(terms), p - 2 * r - 1)


def prop1_expansion(lam: int, r: int) -> AsymptoticExpansion:
    """Expansion of ``zeta'(-lam, z)`` as ``z -> oo``, written with Stirling sums.

    ``z^(lam+1) log z/(lam+1) - z^lam log z/2 - z^(lam+1)/(lam+1)^2`` plus, for
    each ``j <= r``, ``z^(lam+1-2j) B_2j/(2j)!`` times
    ``sum_k (k+1) [2j-1, k+1] (-lam)^k`` and ``-log z`` times
    ``B_2j (-lam)_{2j-1}/(2j)!``.
    """
    if lam < 0:
        raise ValueError("lam must be non-negative")
    if r < 1:
        raise ValueError("r must be at least 1")
    p = Fraction(lam)
    terms = [
        (p + 1, 1, Fraction(1, lam + 1)),
        (p, 1, Fraction(-1, 2)),
        (p + 1, 0, Fraction(-1, (lam + 1) ** 2)),
    ]
    for j in range(1, r + 1):
        bc = bernoulli_number(2 * j) / factorial(2 * j)
        # [n, k] vanishes for k > n, so the inner sum stops at k = 2j - 2
        inner = sum(
            ((k + 1) * stirling_cycle(2 * j - 1, k + 1) * Fraction(-lam) ** k for k in range(2 * j)),
            Fraction(0),
        )
        terms.append((p + 1 - 2 * j, 0, bc * inner))
        terms.append((p + 1 - 2 * j, 1, -bc * pochhammer(-lam, 2 * j - 1)))
    return AsymptoticExpansion("z", tuple(terms), p - 2 * r - 1)


def kth_deriv_asymptotic(k: int, r: int = 0) -> AsymptoticExpansion:
    """Expansion of ``zeta^(k)(0, N)`` for large ``N``.

    The leading part is ``N sum_i (-1)^(i+1) k!/i! log^i N + (-1)^k/2 log^k N``;
    ``r > 0`` appends Bernoulli corrections down to ``N^(-2r+1)``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    e = sderiv_expansion(0, k, r)
    return AsymptoticExpansion("N", e.terms, e.remainder_order)


# -- derivatives at non-positive integers ------------------------------------


def _sderiv_shift_base(lam: int) -> float:
    # The expansion wants w large, the head/tail cancellation w^(lam+1) wants it small.
    return 5.0 if lam <= 3 else 4.5


def zeta_sderiv_neg(lam: int, z: float) -> float:
    """``zeta'(-lam, z)``, the s-derivative at the non-positive integer ``-lam``.

    Shifts ``z`` up with ``zeta'(-lam, z) = zeta'(-lam, z+1) - z^lam log z``
    and finishes with the large-``z`` expansion, adding Bernoulli terms until
    they stop decreasing or drop below rounding level.
    """
    if lam < 0 or int(lam) != lam:
        raise ValueError("lam must be a non-negative integer")
    lam = int(lam)
    z = _check_z(z)
    wmin = _sderiv_shift_base(lam)
    M = max(0, math.ceil(wmin - z))
    head = [-((z + i) ** lam) * math.log(z + i) for i in range(M)]
    w = z + M
    L = math.log(w)
    lead = [
        w ** (lam + 1) * L / (lam + 1),
        -(w**lam) * L / 2,
        -(w ** (lam + 1)) / (lam + 1) ** 2,
    ]
    pieces = head + lead
    bound = math.fsum(abs(x) for x in pieces)
    prev = math.inf
    for j, (c0, c1) in enumerate(_expansion_coeffs(lam), start=1):
        t = w ** (lam + 1 - 2 * j) * (c0 + c1 * L)
        mag = w ** (lam + 1 - 2 * j) * (abs(c0) + abs(c1 * L))
        if mag > prev and j > 2:
            break
        pieces.append(t)
        prev = mag
        if mag <= 1e-17 * bound:
            break
    return math.fsum(pieces)


@lru_cache(maxsize=None)
def _expansion_coeffs(lam: int) -> tuple[tuple[float, float], ...]:
    e = prop1_expansion(lam, _MAX_BERNOULLI // 2)
    out = []
    for j in range(1, _MAX_BERNOULLI // 2 + 1):
        p = lam + 1 - 2 * j
        out.append((float(e.coefficient(p, 0)), float(e.coefficient(p, 1))))
    return tuple(out)


@lru_cache(maxsize=None)
def riemann_zeta_deriv_neg(lam: int) -> float:
    """``zeta'(-lam)``, cached for the lifetime of the process."""
    return zeta_sderiv_neg(lam, 1.0)


def zeta_kth_deriv_at0(k: int, z: float) -> float:
    """``d^k/ds^k zeta(s, z)`` at ``s = 0`` for ``0 <= k <= 4``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > 4:
        raise UnsupportedError("only k <= 4 is supported in binary64")
    if k == 0:
        return hurwitz_zeta(0.0, z)
    return hurwitz_zeta_deriv(0.0, z, k)


# -- Stieltjes constants ------------------------------------------------------


def _log_over_x_derivs(k: int, m_max: int) -> list[list[int]]:
    """``f^(m)(x) = x^(-1-m) sum_i c[m][i] log^i x`` for ``f = log^k x / x``."""
    rows = [[0] * k + [1]]
    for m in range(m_max):
        prev = rows[-1]
        row = [0] * (k + 1)
        for i, c in enumerate(prev):
            if c:
                row[i] += (-1 - m) * c
                if i:
                    row[i - 1] += i * c
        rows.append(row)
    return rows


def stieltjes(k: int) -> float:
    """Stieltjes constant ``gamma_k`` for ``k <= 2``.

    ``gamma_k = lim (sum_{n<=N} log^k n / n - log^(k+1) N/(k+1))``, with the
    limit taken by Euler-Maclaurin corrections at ``N = 20``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > 2:
        raise UnsupportedError("Stieltjes constants are provided for k <= 2")
    N = 20
    J = 10
    head = [math.log(n) ** k / n for n in range(1, N + 1)]
    L = math.log(N)
    rows = _log_over_x_derivs(k, 2 * J)
    pieces = head + [-(L ** (k + 1)) / (k + 1), -0.5 * L**k / N]
    for j in range(1, J + 1):
        m = 2 * j - 1
        fm = N ** (-1.0 - m) * math.fsum(c * L**i for i, c in enumerate(rows[m]))
        # tail sum_{n>N} f(n) = int_N^oo f + ... ; sign from f(N)/2 removed above
        pieces.append(-_BC[j] * fm)
    return math.fsum(pieces)
