"""Brute-force reference values: extrapolated partial sums and products,
and finite-difference s-derivatives.

Nothing here uses a closed form.  The only information borrowed from the
symbolic side is the *shape* of a series' tail (which ``N^-i log^b N``
occur), never a coefficient.  Divergent series are refused.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, OracleError
from .exactcomb import stirling_subset
from .hurwitz import hurwitz_zeta
from .specs import ProductSpec, SeriesSpec

__all__ = [
    "ExtrapolationReport",
    "extrapolate",
    "partial_sum_extrapolated",
    "partial_product_extrapolated",
    "partial_product_log",
    "finite_difference_sderiv",
    "polylog_boundary_series",
]

MAX_TERMS = 2**20
_FD_STEP = 1.0 / 64


@dataclass(frozen=True)
class ExtrapolationReport:
    raw_value_at_N: float
    extrapolated: float
    N: int
    levels: int
    estimated_error: float


Basis = Sequence[tuple[float, int]]  # (power, logpower) with power < 0


def _fit(nodes: Sequence[float], values: Sequence[float], basis: Basis) -> float:
    """Solve ``S(n) = S + sum_b c_b n^p log^q n`` exactly on the given nodes."""
    rows = []
    for n in nodes:
        ln = math.log(n)
        rows.append([1.0] + [n**p * ln**q for p, q in basis])
    a = np.array(rows)
    # column scaling keeps the system well conditioned
    scale = np.max(np.abs(a), axis=0)
    sol = np.linalg.solve(a / scale, np.asarray(values, dtype=float))
    return float(sol[0] / scale[0])


def extrapolate(
    nodes: Sequence[int], values: Sequence[float], basis: Basis, levels: int
) -> tuple[float, float]:
    """Generalized Richardson extrapolation to ``n -> oo``.

    Uses the last ``levels + 1`` nodes with the first ``levels`` basis
    functions; the error estimate compares with the fit one level lower.
    """
    if levels < 1 or len(nodes) < levels + 1 or len(basis) < levels:
        raise ValueError("not enough nodes or basis functions for the requested levels")
    best = _fit(nodes[-(levels + 1):], values[-(levels + 1):], basis[:levels])
    if levels == 1:
        lower = values[-1]
    else:
        lower = _fit(nodes[-levels:], values[-levels:], basis[: levels - 1])
    return best, abs(best - lower)


def _checkpoint_sums(terms: np.ndarray, checkpoints: Sequence[int]) -> list[float]:
    """Compensated partial sums ``sum terms[:c]`` at each checkpoint."""
    out = []
    acc_parts: list[float] = []
    start = 0
    for c in checkpoints:
        acc_parts.append(math.fsum(terms[start:c].tolist()))
        start = c
        out.append(math.fsum(acc_parts))
    if not all(math.isfinite(v) for v in out):
        raise OverflowError("partial sums left the binary64 range")
    return out


def _check_n(N: int, levels: int) -> None:
    if N < 64:
        raise ValueError("N must be at least 64")
    if not 1 <= levels <= 5:
        raise ValueError("levels must be between 1 and 5")
    if N * 2**levels > MAX_TERMS:
        raise ValueError(f"N * 2^levels exceeds {MAX_TERMS} terms")


def _series_terms(spec: SeriesSpec, count: int) -> np.ndarray:
    k = np.arange(spec.start_index, spec.start_index + count, dtype=float)
    total = np.zeros(count)
    for t in spec.terms:
        arg = k + float(t.z)
        if np.any(arg <= 0):
            raise DomainError(f"log(k + {t.z}) is undefined for some k in range")
        total += float(t.coeff) * k**t.p * np.log(arg) ** t.logpower
    return total


def _tail_basis(spec: SeriesSpec) -> list[tuple[float, int]]:
    from .seriesengine import evaluate_series

    result = evaluate_series(spec)
    if not result.convergent:
        raise OracleError("series diverges; the oracle does not regularize")
    keys = [(float(p), b) for p, b in result.partial_sum_profile.keys() if p < 0]
    if not keys:
        keys = [(-1.0, 0)]
    # pad with higher powers so any level count has enough basis functions
    lowest = min(p for p, _ in keys)
    logs = max(b for _, b in keys)
    extra = [(lowest - i, b) for i in range(1, 6) for b in range(logs, -1, -1)]
    return keys + extra


def partial_sum_extrapolated(spec: SeriesSpec, N: int = 512, levels: int = 3) -> ExtrapolationReport:
    """Partial sums at ``N, 2N, ..., 2^levels N`` extrapolated to infinity."""
    _check_n(N, levels)
    basis = _tail_basis(spec)
    nodes = [N * 2**l for l in range(levels + 1)]
    terms = _series_terms(spec, nodes[-1] - spec.start_index + 1)
    sums = _checkpoint_sums(terms, [n - spec.start_index + 1 for n in nodes])
    value, err = extrapolate(nodes, sums, basis, levels)
    return ExtrapolationReport(sums[0], value, N, levels, err)


def partial_product_log(spec: ProductSpec, upper: int) -> float:
    """``log prod_{k=start}^{upper}`` of the product's factors."""
    count = upper - spec.start_index + 1
    return _checkpoint_sums(_product_log_terms(spec, count), [count])[0]


def _product_log_terms(spec: ProductSpec, count: int) -> np.ndarray:
    k = np.arange(spec.start_index, spec.start_index + count, dtype=float)
    x = float(spec.x)
    sign = np.where(k.astype(np.int64) % 2 == 0, 1.0, -1.0)
    if spec.kind == "melzak_linear":
        eps = 2 * x / k
        expo = -k * sign
    else:
        eps = -4 * x * x / (k * k)
        expo = -k * k * sign
    if np.any(eps <= -1):
        raise DomainError("a factor of the product is zero or negative")
    # log1p: the factors approach 1 and the exponents grow like k^2
    return expo * np.log1p(eps)


def partial_product_extrapolated(
    spec: ProductSpec, N: int = 1024, levels: int = 3
) -> ExtrapolationReport:
    """Products truncated at the even indices ``2N, 4N, ...``, extrapolated in log space."""
    _check_n(N, levels)
    uppers = [2 * N * 2**l for l in range(levels + 1)]
    count = uppers[-1] - spec.start_index + 1
    logs = _checkpoint_sums(
        _product_log_terms(spec, count), [u - spec.start_index + 1 for u in uppers]
    )
    basis = [(-float(i), 0) for i in range(1, 8)]
    value, err = extrapolate(uppers, logs, basis, levels)
    v = math.exp(value)
    return ExtrapolationReport(math.exp(logs[0]), v, N, levels, v * err)


# -- finite differences ---------------------------------------------------------

_STENCILS = {
    1: ([-1, 1], [-0.5, 0.5]),
    2: ([-1, 0, 1], [1.0, -2.0, 1.0]),
    3: ([-2, -1, 1, 2], [-0.5, 1.0, -1.0, 0.5]),
    4: ([-2, -1, 0, 1, 2], [1.0, -4.0, 6.0, -4.0, 1.0]),
}


def _central(f: Callable[[float], float], s0: float, order: int, h: float) -> float:
    offs, ws = _STENCILS[order]
    return math.fsum(w * f(s0 + o * h) for o, w in zip(offs, ws)) / h**order


def finite_difference_sderiv(lam: int, z: float, order: int = 1) -> float:
    """``order``-th s-derivative of ``zeta(s, z)`` at ``s = -lam``.

    Central differences with steps ``h, h/2, h/4`` (``h = 1/64``) and two
    Richardson eliminations of the ``h^2`` and ``h^4`` error terms.
    """
    z = float(z)
    if not z > 0:
        raise DomainError("z must be positive")
    if order not in _STENCILS:
        raise ValueError("order must be 1, 2, 3 or 4")
    s0 = -float(lam)

    def f(s: float) -> float:
        return hurwitz_zeta(s, z)

    d = [_central(f, s0, order, _FD_STEP / 2**i) for i in range(3)]
    r1 = [(4 * d[i + 1] - d[i]) / 3 for i in range(2)]
    return (16 * r1[1] - r1[0]) / 15


# -- polylogarithm reference ----------------------------------------------------


def _power_difference(k: float, m: float, j: int) -> float:
    """Backward difference ``nabla^j n^-k`` at ``n = m``.

    Summed from ``(1 - i/m)^-k = sum_r (k)_r/r! (i/m)^r`` so that no two
    nearly equal numbers are ever subtracted.
    """
    c = 1.0
    for r in range(1, j + 1):
        c *= (k + r - 1) / r / m
    acc = 0.0
    for r in range(j, j + 41):
        if r > j:
            c *= (k + r - 1) / r / m
        term = c * stirling_subset(r, j)
        acc += term
        if term < 1e-18 * acc:
            break
    return (-1) ** j * math.factorial(j) * acc * m ** (-k)


def polylog_boundary_series(k: int, theta: float, N: int | None = None, depth: int = 12) -> complex:
    """``sum_n e^(i n theta) / n^k`` summed directly to ``N`` with a tail correction.

    The tail ``T(f) = sum_{n>N} w^n f(n)`` satisfies
    ``(1 - w) T(f) = w^(N+1) f(N+1) + T(f(n) - f(n-1))``, a summation by parts
    that gains a factor ``~1/(N |1 - w|)`` per step, so by default ``N`` grows
    as ``theta`` approaches 0.  At ``w = 1`` the series is ``zeta(k)``.
    """
    if k < 2:
        raise ValueError("k must be at least 2 for absolute convergence")
    theta = math.remainder(float(theta), 2 * math.pi)
    if theta == 0.0:
        return complex(hurwitz_zeta(float(k), 1.0), 0.0)
    w = complex(math.cos(theta), math.sin(theta))
    if N is None:
        N = max(4096, math.ceil(64 / abs(1 - w)))
    if N > MAX_TERMS:
        raise ValueError(f"theta = {theta} needs more than {MAX_TERMS} terms")
    n = np.arange(1, N + 1, dtype=float)
    ph = np.exp(1j * theta * n)
    head = ph / n**k
    re = math.fsum(head.real.tolist())
    im = math.fsum(head.imag.tolist())
    tail = 0j
    factor = 1.0 / (1 - w)
    for j in range(depth + 1):
        start = N + 1 + j
        tail += cmath.exp(1j * theta * start) * _power_difference(float(k), float(start), j) * factor ** (j + 1)
    return complex(re, im) + tail
