"""Named mathematical constants used by closed forms."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

__all__ = ["catalan_constant", "named_constant", "CONSTANT_NAMES"]


def _alternating_cvz(a: Callable[[int], float], n: int = 30) -> float:
    """``sum_k (-1)^k a(k)`` by the Cohen-Rodriguez Villegas-Zagier transform."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


@lru_cache(maxsize=None)
def catalan_constant() -> float:
    """Catalan's constant ``G = sum_k (-1)^k / (2k+1)^2``."""
    return _alternating_cvz(lambda k: 1.0 / (2 * k + 1) ** 2)


def _zeta3() -> float:
    from .hurwitz import hurwitz_zeta

    return hurwitz_zeta(3.0, 1.0)


def _stieltjes(k: int) -> Callable[[], float]:
    def f() -> float:
        from .hurwitz import stieltjes

        return stieltjes(k)

    return f


def _log_a() -> float:
    from .gammas import glaisher_log

    return glaisher_log()


_REGISTRY: dict[str, Callable[[], float]] = {
    "pi": lambda: math.pi,
    "log(pi)": lambda: math.log(math.pi),
    "log(2)": lambda: math.log(2.0),
    "log(2*pi)": lambda: math.log(2.0 * math.pi),
    "gamma": _stieltjes(0),
    "gamma_1": _stieltjes(1),
    "zeta(3)": _zeta3,
    "Catalan": catalan_constant,
    "log(A)": _log_a,
}

CONSTANT_NAMES = tuple(_REGISTRY)


@lru_cache(maxsize=None)
def named_constant(name: str) -> float:
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise KeyError(f"unknown constant {name!r}") from None
