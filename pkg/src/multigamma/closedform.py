"""Symbolic closed forms: rational combinations of products of special values.

A :class:`ClosedForm` is a finite sum ``sum_i w_i * prod_j a_ij`` with exact
rational weights ``w_i`` and atoms ``a_ij`` such as ``zeta'(-1, 3/2)``,
``log Gamma_3(1/2)``, ``log(2)^2`` or a named constant.  The empty product
carries the rational part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional, Union

from .asymptotic import format_rational
from .constants import CONSTANT_NAMES, named_constant
from .exactcomb import bernoulli_poly

__all__ = [
    "Atom",
    "ClosedForm",
    "zeta_deriv",
    "log_gamma",
    "log_power",
    "const",
    "rational",
]

_KIND_ORDER = {"const": 0, "logpow": 1, "zeta_deriv": 2, "log_gamma": 3}


@dataclass(frozen=True)
class Atom:
    """One transcendental factor.

    kinds and ``args``:
      * ``zeta_deriv``: ``(m, j, q)`` for ``d^m/ds^m zeta(s, q)`` at ``s = -j``
      * ``log_gamma``: ``(n, q)`` for ``log Gamma_n(q)``
      * ``logpow``: ``(q, m)`` for ``log(q)^m``
      * ``const``: ``(name,)``, see :data:`multigamma.constants.CONSTANT_NAMES`
    """

    kind: str
    args: tuple

    def sort_key(self):
        return (_KIND_ORDER[self.kind],) + tuple(
            (0, a) if not isinstance(a, str) else (1, a) for a in self.args
        )

    def __lt__(self, other: "Atom"):
        return self.sort_key() < other.sort_key()

    def value(self) -> float:
        return _atom_value(self)

    def __str__(self):
        k, a = self.kind, self.args
        if k == "zeta_deriv":
            m, j, q = a
            tick = "'" * m if m <= 3 else f"^({m})"
            return f"zeta{tick}({-j}, {format_rational(q)})"
        if k == "log_gamma":
            n, q = a
            name = {1: "log Gamma", 2: "log Gamma_2"}.get(n, f"log Gamma_{n}")
            return f"{name}({format_rational(q)})"
        if k == "logpow":
            q, m = a
            return f"log({format_rational(q)})" + (f"^{m}" if m != 1 else "")
        return a[0]


@lru_cache(maxsize=None)
def _atom_value(atom: Atom) -> float:
    from . import gammas, hurwitz

    k, a = atom.kind, atom.args
    if k == "zeta_deriv":
        m, j, q = a
        if m == 1:
            return hurwitz.zeta_sderiv_neg(j, float(q))
        if j == 0 and m <= 4:
            return hurwitz.zeta_kth_deriv_at0(m, float(q))
        return hurwitz.hurwitz_zeta_deriv(-float(j), float(q), m)
    if k == "log_gamma":
        n, q = a
        return gammas.log_multiple_gamma(n, float(q))
    if k == "logpow":
        q, m = a
        return (math.log(q.numerator) - math.log(q.denominator)) ** m
    return named_constant(a[0])


Monomial = tuple[Atom, ...]


@dataclass(frozen=True)
class ClosedForm:
    """Sum of ``weight * prod(atoms)`` with exact rational weights."""

    terms: tuple[tuple[Monomial, Fraction], ...] = ()
    _value: Optional[float] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        merged: dict[Monomial, Fraction] = {}
        for mono, w in self.terms:
            key = tuple(sorted(mono))
            merged[key] = merged.get(key, Fraction(0)) + Fraction(w)
        items = sorted(
            ((m, w) for m, w in merged.items() if w != 0),
            key=lambda mw: (len(mw[0]), [a.sort_key() for a in mw[0]]),
        )
        object.__setattr__(self, "terms", tuple(items))

    @classmethod
    def from_mapping(cls, mapping: Mapping[Monomial, Fraction]) -> "ClosedForm":
        return cls(tuple(mapping.items()))

    def __add__(self, other: Union["ClosedForm", int, Fraction]) -> "ClosedForm":
        other = _as_form(other)
        return ClosedForm(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-_as_form(other))

    def __rsub__(self, other):
        return _as_form(other) - self

    def scale(self, c) -> "ClosedForm":
        c = Fraction(c)
        return ClosedForm(tuple((m, w * c) for m, w in self.terms))

    def __mul__(self, other) -> "ClosedForm":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = []
        for m1, w1 in self.terms:
            for m2, w2 in other.terms:
                out.append((m1 + m2, w1 * w2))
        return ClosedForm(tuple(out))

    __rmul__ = __mul__

    def rational_part(self) -> Fraction:
        for m, w in self.terms:
            if not m:
                return w
        return Fraction(0)

    def atoms(self) -> list[Atom]:
        seen = sorted({a for m, _ in self.terms for a in m})
        return seen

    def substitute(self, rule: Callable[[Atom], Optional["ClosedForm"]]) -> "ClosedForm":
        """Replace every atom for which ``rule`` returns a form; keep the rest."""
        acc = ClosedForm()
        for mono, w in self.terms:
            prod = rational(w)
            for a in mono:
                repl = rule(a)
                prod = prod * (repl if repl is not None else _atom_form(a))
            acc = acc + prod
        return acc

    @property
    def value(self) -> float:
        if self._value is None:
            object.__setattr__(self, "_value", self.evaluate())
        return self._value

    def evaluate(self) -> float:
        """Fresh evaluation that bypasses the cached value."""
        vals = []
        for mono, w in self.terms:
            v = float(w)
            for a in mono:
                v *= a.value()
            vals.append(v)
        return math.fsum(vals)

    def term_table(self) -> list[dict]:
        """One record per monomial, in canonical order (used for JSON output)."""
        out = []
        for mono, w in self.terms:
            v = float(w)
            for a in mono:
                v *= a.value()
            out.append(
                {
                    "weight": format_rational(w),
                    "factors": [str(a) for a in mono],
                    "value": v,
                }
            )
        return out

    def format(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, w in self.terms:
            body = " * ".join(str(a) for a in mono)
            mag = abs(w)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)} * {body}"
            pieces.append(("-" if w < 0 else "+", text))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self):
        return self.format()


def _as_form(x) -> ClosedForm:
    if isinstance(x, ClosedForm):
        return x
    return rational(x)


def _atom_form(a: Atom) -> ClosedForm:
    return ClosedForm((((a,), Fraction(1)),))


def rational(c) -> ClosedForm:
    c = Fraction(c)
    return ClosedForm((((), c),))


def zeta_deriv(m: int, j: int, q) -> ClosedForm:
    """``d^m/ds^m zeta(s, q)`` at ``s = -j``; ``m = 0`` collapses to a rational."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("zeta atoms need q > 0")
    if m == 0:
        return rational(-bernoulli_poly(j + 1)(q) / (j + 1))
    return _atom_form(Atom("zeta_deriv", (m, j, q)))


def log_gamma(n: int, q) -> ClosedForm:
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log Gamma_n atoms need q > 0")
    if q == 1:
        return ClosedForm()
    return _atom_form(Atom("log_gamma", (n, q)))


def log_power(q, m: int = 1) -> ClosedForm:
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log atoms need q > 0")
    if m == 0:
        return rational(1)
    if q == 1:
        return ClosedForm()
    return _atom_form(Atom("logpow", (q, m)))


def const(name: str) -> ClosedForm:
    if name not in CONSTANT_NAMES:
        raise KeyError(f"unknown constant {name!r}")
    return _atom_form(Atom("const", (name,)))


def linear_sum(items: Iterable[ClosedForm]) -> ClosedForm:
    acc = ClosedForm()
    for f in items:
        acc = acc + f
    return acc
