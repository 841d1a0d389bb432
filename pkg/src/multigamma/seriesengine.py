"""Zeta-regularized sums of ``R(k) log^m (k + z)``.

Each summand ``k^p log^m(k+z)`` is rewritten with ``k^p = ((k+z) - z)^p``, and

    sum_{k=1}^{N} (k+z)^j log^m(k+z) = (-1)^m [zeta^(m)(-j, z+1) - zeta^(m)(-j, N+z+1)].

The second cumulant is replaced by its exact large-``N`` expansion.  Growing
terms either cancel exactly between summands (the series converges) or make
up the divergence profile, and the ``N^0`` coefficient gives the constant
term in the Hadamard sense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import closedform as cf
from .asymptotic import AsymptoticExpansion, zero
from .closedform import ClosedForm
from .errors import DomainError, UnsupportedError
from .gammas import log_barnes_g, log_multiple_gamma
from .hurwitz import hurwitz_zeta, riemann_zeta_deriv_neg, sderiv_expansion, stieltjes
from .pqpoly import q_poly
from .specs import SeriesSpec

__all__ = [
    "RegularizedResult",
    "phi_regularized",
    "evaluate_series",
    "dilcher_spec",
    "dilcher_sum",
    "to_gamma_atoms",
    "zeta_power_series",
    "zeta_power_series_direct",
    "MAX_LOGPOWER",
]

MAX_LOGPOWER = 4
_SHIFT_ORDER = 5


@dataclass(frozen=True)
class RegularizedResult:
    """Outcome of zeta-regularizing a series.

    ``constant_term`` is written with multiple gamma atoms where possible and
    ``zeta_form`` keeps the Hurwitz-derivative atoms it came from.
    ``divergent_profile`` is the growing part of the partial sums; it is empty
    exactly when the series converges.  ``partial_sum_profile`` is the whole
    ``N``-dependent part, decaying terms included.
    """

    convergent: bool
    constant_term: ClosedForm
    divergent_profile: AsymptoticExpansion
    zeta_form: ClosedForm
    partial_sum_profile: AsymptoticExpansion = zero("N")

    @property
    def value(self) -> float:
        return self.constant_term.value


@lru_cache(maxsize=None)
def _cumulant_expansion(j: int, m: int, a: Fraction) -> AsymptoticExpansion:
    """Expansion of ``zeta^(m)(-j, N + a)`` in powers of ``N``."""
    r = j // 2 + 3
    return sderiv_expansion(j, m, r).shift(a, _SHIFT_ORDER, "N")


def to_gamma_atoms(form: ClosedForm) -> ClosedForm:
    """Replace ``zeta'(-j, q)``, ``q != 1``, by multiple gamma atoms.

    Uses ``zeta'(-j, q) = zeta'(-j) + (-1)^j sum_k (-1)^k k! Q_{k,j}(q) log Gamma_{k+1}(q)``.
    """

    def rule(atom: cf.Atom):
        if atom.kind != "zeta_deriv":
            return None
        m, j, q = atom.args
        if m != 1 or q == 1:
            return None
        acc = cf.zeta_deriv(1, j, 1)
        for k in range(j + 1):
            w = (-1) ** (j + k) * math.factorial(k) * q_poly(k, j)(q)
            acc = acc + cf.log_gamma(k + 1, q).scale(w)
        return acc

    return form.substitute(rule)


def evaluate_series(spec: SeriesSpec) -> RegularizedResult:
    """Regularize ``sum_{k >= start} sum_i c_i k^p_i log^m_i (k + z_i)``."""
    profile = zero("N")
    constant = ClosedForm()
    for t in spec.terms:
        if t.z <= -1:
            raise DomainError(f"shift z = {t.z} must exceed -1")
        if t.logpower > MAX_LOGPOWER:
            raise UnsupportedError(f"log powers above {MAX_LOGPOWER} are not supported")
        sign = (-1) ** t.logpower
        a = t.z + 1
        for j in range(t.p + 1):
            w = t.coeff * comb(t.p, j) * (-t.z) ** (t.p - j)
            if w == 0:
                continue
            E = _cumulant_expansion(j, t.logpower, a)
            profile = profile + E.scale(-sign * w)
            atom = cf.zeta_deriv(t.logpower, j, a)
            constant = constant + (atom - E.constant()).scale(sign * w)
    constant = constant + _start_correction(spec)
    growing = profile.growing()
    return RegularizedResult(
        convergent=not growing,
        constant_term=to_gamma_atoms(constant),
        divergent_profile=growing,
        zeta_form=constant,
        partial_sum_profile=AsymptoticExpansion(
            "N",
            tuple(t for t in profile.terms if (t[0], t[1]) != (0, 0)),
            profile.remainder_order,
        ),
    )


def _start_correction(spec: SeriesSpec) -> ClosedForm:
    """Adjust the ``k = 1`` based sum to start at ``spec.start_index``."""
    acc = ClosedForm()
    if spec.start_index == 0:
        for t in spec.terms:
            if t.p == 0:
                if t.z <= 0:
                    raise DomainError(f"log({t.z}) at k = 0 is undefined")
                acc = acc + cf.log_power(t.z, t.logpower).scale(t.coeff)
    for k in range(1, spec.start_index):
        for t in spec.terms:
            acc = acc - cf.log_power(k + t.z, t.logpower).scale(t.coeff * k**t.p)
    return acc


def phi_regularized(p: int, z, logpower: int = 1) -> RegularizedResult:
    """Regularized ``sum_{k>=1} k^p log^logpower (k + z)``."""
    z = Fraction(z)
    if z <= -1:
        raise DomainError(f"shift z = {z} must exceed -1")
    return evaluate_series(SeriesSpec.create([(1, p, z, logpower)]))


def dilcher_spec(k: int) -> SeriesSpec:
    """``sum_{j>=1} log^k(j + 1/2) - 2 log^k j + log^k(j - 1/2)``."""
    half = Fraction(1, 2)
    return SeriesSpec.create([(1, 0, half, k), (-2, 0, 0, k), (1, 0, -half, k)])


def dilcher_sum(k: int) -> ClosedForm:
    """``D_k`` in terms of ``zeta^(j)(0)`` and ``log 2``.

    ``(-1)^k D_k / 2 = -log^k 2 - zeta^(k)(0) + sum_{j=1}^{k-1} C(k, j) zeta^(k-j)(0) log^j 2``.
    """
    if not 1 <= k <= MAX_LOGPOWER:
        raise UnsupportedError(f"dilcher_sum needs 1 <= k <= {MAX_LOGPOWER}")
    rhs = -cf.log_power(2, k) - cf.zeta_deriv(k, 0, 1)
    for j in range(1, k):
        rhs = rhs + (cf.zeta_deriv(k - j, 0, 1) * cf.log_power(2, j)).scale(comb(k, j))
    return rhs.scale(2 * (-1) ** k)


def _gamma_order(r: int) -> int:
    # r = 1 is accepted as a label for the Barnes case, whose denominator is k + 1
    if r in (1, 2):
        return 2
    if r == 3:
        return 3
    raise UnsupportedError("only the Barnes (r = 1 or 2) and triple gamma (r = 3) cases exist")


def zeta_power_series_direct(z: float, r: int) -> float:
    """``sum_{k>=2} (-z)^k zeta(k) / (k + r - 1)`` summed term by term.

    ``r = 1`` is read as ``r = 2``, the Barnes case with denominator ``k + 1``.
    """
    r = _gamma_order(r)
    z = float(z)
    if not abs(z) < 1:
        raise DomainError("|z| must be below 1")
    if z == 0:
        return 0.0
    terms = []
    k = 2
    while True:
        t = (-z) ** k * hurwitz_zeta(float(k), 1.0) / (k + r - 1)
        terms.append(t)
        if abs(z) ** k < 1e-18 * max(1.0, abs(terms[0])) or k > 20000:
            break
        k += 1
    return math.fsum(terms)


def zeta_power_series(z: float, r: int) -> float:
    """Closed form of ``sum_{k>=2} (-z)^k zeta(k) / (k + r - 1)``.

    ``r = 2`` (also spelled ``r = 1``): ``(1/z) log G(z+1) + z (gamma + 1)/2 - log(2 pi)/2 + 1/2``.
    ``r = 3``: ``(2/z^2) log Gamma_3(z+1) + (1/z^2) log G(z+1) + (6z^2+3z-1)/(12z)
    + gamma z/3 - log(2 pi)/2 - 2 zeta'(-1)/z``.
    """
    z = float(z)
    if not abs(z) < 1:
        raise DomainError("|z| must be below 1")
    r = _gamma_order(r)
    if z == 0:
        return 0.0
    gamma = stieltjes(0)
    log2pi = math.log(2 * math.pi)
    lg = log_barnes_g(z + 1)
    if r == 2:
        return math.fsum([lg / z, z * (gamma + 1) / 2, -log2pi / 2, 0.5])
    lg3 = log_multiple_gamma(3, z + 1)
    return math.fsum(
        [
            2 * lg3 / z**2,
            lg / z**2,
            (6 * z**2 + 3 * z - 1) / (12 * z),
            gamma * z / 3,
            -log2pi / 2,
            -2 * riemann_zeta_deriv_neg(1) / z,
        ]
    )
