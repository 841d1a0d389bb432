"""Formal asymptotic expansions ``sum c * x^a * log^b x + O(x^r)``.

Coefficients and exponents are exact rationals so that divergent parts of
different sums can be cancelled against each other without any floating
point threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Optional

from .exactcomb import binomial_general

__all__ = ["AsymptoticExpansion", "format_rational"]

Key = tuple[Fraction, int]


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class AsymptoticExpansion:
    """Terms ``coeff * x^power * log^logpower x`` in variable ``variable``.

    ``terms`` is sorted by descending power, then descending log power; keys
    are unique and no coefficient is zero.  ``remainder_order`` is the
    exponent ``r`` of the omitted ``O(x^r)`` (``None`` when exact).
    """

    variable: str
    terms: tuple[tuple[Fraction, int, Fraction], ...] = ()
    remainder_order: Optional[Fraction] = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        merged: dict[Key, Fraction] = {}
        for p, b, c in self.terms:
            key = (Fraction(p), int(b))
            merged[key] = merged.get(key, Fraction(0)) + Fraction(c)
        terms = tuple(
            (p, b, c)
            for (p, b), c in sorted(merged.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
            if c != 0
        )
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_index", {(p, b): c for p, b, c in terms})
        if self.remainder_order is not None:
            object.__setattr__(self, "remainder_order", Fraction(self.remainder_order))

    @classmethod
    def from_mapping(
        cls,
        variable: str,
        mapping: Mapping[Key, Fraction],
        remainder_order: Optional[Fraction] = None,
    ) -> "AsymptoticExpansion":
        return cls(variable, tuple((p, b, c) for (p, b), c in mapping.items()), remainder_order)

    def coefficient(self, power, logpower: int = 0) -> Fraction:
        return self._index.get((Fraction(power), logpower), Fraction(0))

    def keys(self) -> list[Key]:
        return [(p, b) for p, b, _ in self.terms]

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "AsymptoticExpansion") -> "AsymptoticExpansion":
        if other.variable != self.variable:
            raise ValueError("cannot add expansions in different variables")
        return AsymptoticExpansion(
            self.variable, self.terms + other.terms, _min_remainder(self, other)
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AsymptoticExpansion":
        c = Fraction(c)
        return AsymptoticExpansion(
            self.variable, tuple((p, b, c * k) for p, b, k in self.terms), self.remainder_order
        )

    def growing(self) -> "AsymptoticExpansion":
        """Terms that do not vanish as ``x -> oo`` apart from the constant."""
        keep = tuple(t for t in self.terms if t[0] > 0 or (t[0] == 0 and t[1] > 0))
        return AsymptoticExpansion(self.variable, keep, None)

    def constant(self) -> Fraction:
        return self.coefficient(0, 0)

    def truncate(self, above) -> "AsymptoticExpansion":
        """Keep only terms with power strictly greater than ``above``."""
        above = Fraction(above)
        keep = tuple(t for t in self.terms if t[0] > above)
        rem = above if self.remainder_order is None else max(above, self.remainder_order)
        return AsymptoticExpansion(self.variable, keep, rem)

    def evaluate(self, x: float) -> float:
        lx = math.log(x)
        return math.fsum(float(c) * x ** float(p) * lx**b for p, b, c in self.terms)

    def shift(self, c, order: int, variable: str = "N") -> "AsymptoticExpansion":
        """Re-expand in ``N`` where ``x = N + c``, keeping powers ``>= -order``."""
        c = Fraction(c)
        # log(1 + c/N) = sum_{i>=1} (-1)^(i+1) c^i / (i N^i), as coefficients of N^-i.
        depth = order + 1 + int(max((t[0] for t in self.terms), default=0)) + 1
        log_series = [Fraction(0)] + [
            Fraction((-1) ** (i + 1)) * c**i / i for i in range(1, depth + 1)
        ]
        out: dict[Key, Fraction] = {}
        for p, b, k in self.terms:
            # (N + c)^p = N^p sum_i C(p, i) c^i N^-i
            nmax = int(math.floor(p + order))
            if nmax < 0:
                continue
            power_series = [binomial_general(p, i) * c**i for i in range(nmax + 1)]
            # log^b(N + c) = sum_t C(b, t) log^(b-t) N * (log-series)^t
            lpow = [Fraction(1)] + [Fraction(0)] * nmax
            for t in range(b + 1):
                if t > 0:
                    lpow = _mul_series(lpow, log_series, nmax)
                if t > nmax and t > 0:
                    break
                prod = _mul_series(power_series, lpow, nmax)
                for i, v in enumerate(prod):
                    if v:
                        key = (p - i, b - t)
                        out[key] = out.get(key, Fraction(0)) + k * comb(b, t) * v
        rem = Fraction(-order - 1)
        if self.remainder_order is not None:
            rem = max(rem, self.remainder_order)
        return AsymptoticExpansion.from_mapping(variable, out, rem)

    def __str__(self):
        return self.format()

    def format(self) -> str:
        """Human-readable form such as ``N log N - N + (1/2) log N``."""
        if not self.terms:
            return "0"
        pieces = []
        v = self.variable
        for p, b, c in self.terms:
            mono = []
            if p != 0:
                mono.append(v if p == 1 else f"{v}^{format_rational(p)}" if p > 0 else f"{v}^({format_rational(p)})")
            if b:
                mono.append(f"log {v}" if b == 1 else f"log^{b} {v}")
            body = " ".join(mono)
            mag = abs(c)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            elif mag.denominator == 1:
                text = f"{mag.numerator} {body}"
            else:
                text = f"({format_rational(mag)}) {body}"
            pieces.append(("-" if c < 0 else "+", text))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


def _mul_series(a: list[Fraction], b: list[Fraction], nmax: int) -> list[Fraction]:
    out = [Fraction(0)] * (nmax + 1)
    for i, x in enumerate(a[: nmax + 1]):
        if x:
            for j, y in enumerate(b[: nmax + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


def _min_remainder(a: AsymptoticExpansion, b: AsymptoticExpansion) -> Optional[Fraction]:
    rs = [r for r in (a.remainder_order, b.remainder_order) if r is not None]
    return max(rs) if rs else None


def zero(variable: str = "N") -> AsymptoticExpansion:
    return AsymptoticExpansion(variable)


def sum_expansions(items: Iterable[AsymptoticExpansion], variable: str = "N") -> AsymptoticExpansion:
    acc = zero(variable)
    for e in items:
        acc = acc + e
    return acc
