"""Exact combinatorial kernel.

Stirling numbers of both kinds, Bernoulli numbers and polynomials,
Pochhammer symbols and binomial coefficients with a rational upper
argument.  Everything here is exact (``int`` / ``Fraction``); floating point
never enters.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence, Union

__all__ = [
    "RationalPolynomial",
    "stirling_cycle",
    "stirling_subset",
    "bernoulli_number",
    "bernoulli_poly",
    "pochhammer",
    "binomial_general",
    "falling_binomial_poly",
]

Rational = Union[int, Fraction]


class RationalPolynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``.  Trailing zeros are stripped
    on construction, so two equal polynomials always compare equal and the
    zero polynomial has ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Rational) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Rational = 1) -> "RationalPolynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, z):
        """Horner evaluation; exact for rational ``z``, float for float ``z``."""
        acc = Fraction(0) if isinstance(z, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * z + (c if isinstance(acc, Fraction) else float(c))
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = RationalPolynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial([other])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, inner: "RationalPolynomial") -> "RationalPolynomial":
        """Return ``self(inner(z))``."""
        acc = RationalPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and abs(c) == 1:
                text = mono
            else:
                text = f"{abs(c)}" + (f"*{mono}" if mono else "")
            parts.append(("-" if c < 0 else "+", text))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


def _as_poly(x) -> RationalPolynomial:
    if isinstance(x, RationalPolynomial):
        return x
    return RationalPolynomial([x])


# Stirling tables grow row by row; rows are immutable once published.
_cycle_rows: list[tuple[int, ...]] = [(1,)]
_subset_rows: list[tuple[int, ...]] = [(1,)]
_table_lock = threading.Lock()


def _extend(rows: list[tuple[int, ...]], n: int, weight) -> tuple[int, ...]:
    if n < len(rows):
        return rows[n]
    with _table_lock:
        while len(rows) <= n:
            m = len(rows)
            prev = rows[-1]
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                a = prev[k] if k < len(prev) else 0
                row[k] = weight(m, k) * a + prev[k - 1]
            rows.append(tuple(row))
    return rows[n]


def stirling_cycle(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind ``[n, k]``.

    Counts permutations of ``n`` elements with ``k`` cycles; zero for
    ``k > n``.
    """
    if n < 0 or k < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    if k > n:
        return 0
    return _extend(_cycle_rows, n, lambda m, k: m - 1)[k]


def stirling_subset(n: int, k: int) -> int:
    """Stirling number of the second kind ``{n, k}``; zero for ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    if k > n:
        return 0
    return _extend(_subset_rows, n, lambda m, k: k)[k]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with the convention ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    # sum_{j=0}^{n} C(n+1, j) B_j = 0
    acc = sum(comb(n + 1, j) * bernoulli_number(j) for j in range(n))
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> RationalPolynomial:
    """Bernoulli polynomial ``B_n(z) = sum_j C(n, j) B_j z^(n-j)``."""
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * bernoulli_number(j)
    return RationalPolynomial(coeffs)


def pochhammer(x: Rational, k: int) -> Fraction:
    """Rising factorial ``(x)_k = x (x+1) ... (x+k-1)``."""
    x = Fraction(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def binomial_general(z: Rational, k: int) -> Fraction:
    """``C(z, k) = z (z-1) ... (z-k+1) / k!`` for rational ``z``."""
    z = Fraction(z)
    out = Fraction(1)
    for i in range(k):
        out *= z - i
    return out / factorial(k)


@lru_cache(maxsize=None)
def falling_binomial_poly(k: int) -> RationalPolynomial:
    """``C(z, k)`` as a polynomial in ``z``."""
    p = RationalPolynomial([1])
    for i in range(k):
        p = p * RationalPolynomial([-i, 1])
    return p * Fraction(1, factorial(k))


def poly_from_roots(roots: Sequence[Rational]) -> RationalPolynomial:
    """Monic polynomial ``prod (z - r)``."""
    p = RationalPolynomial([1])
    for r in roots:
        p = p * RationalPolynomial([-Fraction(r), 1])
    return p
