"""Normalized specifications of series and products."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = ["SeriesTerm", "SeriesSpec", "ProductSpec"]


@dataclass(frozen=True, order=True)
class SeriesTerm:
    """``coeff * k^p * log^logpower(k + z)``."""

    p: int
    z: Fraction
    logpower: int
    coeff: Fraction


@dataclass(frozen=True)
class SeriesSpec:
    """``sum_{k >= start_index} sum_i terms[i]``.

    Built through :meth:`create`, which merges terms sharing ``(p, z,
    logpower)``, drops zero coefficients and sorts, so equal series compare
    equal whatever their spelling.
    """

    terms: tuple[SeriesTerm, ...]
    start_index: int = 1

    @classmethod
    def create(cls, terms: Iterable[tuple], start_index: int = 1) -> "SeriesSpec":
        """``terms`` are ``(coeff, p, z, logpower)`` tuples."""
        merged: dict[tuple[int, Fraction, int], Fraction] = {}
        for coeff, p, z, m in terms:
            key = (int(p), Fraction(z), int(m))
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coeff)
        out = tuple(
            SeriesTerm(p, z, m, c) for (p, z, m), c in sorted(merged.items()) if c != 0
        )
        return cls(out, int(start_index))

    def scale(self, c) -> "SeriesSpec":
        c = Fraction(c)
        return SeriesSpec.create(((t.coeff * c, t.p, t.z, t.logpower) for t in self.terms), self.start_index)

    def __add__(self, other: "SeriesSpec") -> "SeriesSpec":
        if other.start_index != self.start_index:
            raise ValueError("cannot add series with different start indices")
        both = [(t.coeff, t.p, t.z, t.logpower) for t in self.terms + other.terms]
        return SeriesSpec.create(both, self.start_index)

    def term_value(self, k: int) -> float:
        """Value of the summand at index ``k`` (floating point)."""
        import math

        acc = []
        for t in self.terms:
            x = k + t.z
            acc.append(float(t.coeff) * float(k) ** t.p * math.log(x.numerator / x.denominator) ** t.logpower)
        return math.fsum(acc)


@dataclass(frozen=True)
class ProductSpec:
    """``melzak_linear``: prod (1 + 2x/k)^(-k (-1)^k).
    ``melzak_squared``: prod (1 - 4x^2/k^2)^(-k^2 (-1)^k).

    Both are truncated at an even index ``2N`` and start at ``start_index``.
    """

    kind: str
    x: Fraction
    start_index: int = 1

    def __post_init__(self):
        if self.kind not in ("melzak_linear", "melzak_squared"):
            raise ValueError(f"unknown product kind {self.kind!r}")
        object.__setattr__(self, "x", Fraction(self.x))
