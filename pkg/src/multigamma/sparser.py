"""Recursive-descent parser for series and product specifications.

Series grammar (whitespace is insignificant)::

    series := "sum(k=" nat "..inf," expr ")"
    expr   := term (("+" | "-") term)*
    term   := [rat "*"] ["k^" nat "*"] "log" ["^" nat] "(" "k" (("+" | "-") rat)? ")"
    rat    := ["-"] digits ["/" positive-digits]

A term may also carry a leading ``-`` without a coefficient (``-log(k)``).

Product grammar::

    product := "melzak(x=" rat ")" | "melzak2(x=" rat ["," "start=" nat] ")"
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .asymptotic import format_rational
from .errors import ParseError, SpecDomainError
from .specs import ProductSpec, SeriesSpec

__all__ = ["parse_series", "parse_product", "unparse", "tokenize", "Token"]

_PUNCT = {"(", ")", "=", ",", "+", "-", "*", "^", "/"}
_WORDS = {"sum", "k", "inf", "log", "melzak", "melzak2", "x", "start"}


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "word", "punct", "dots", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
        elif c.isascii() and c.isdigit():
            j = i
            while j < n and text[j].isascii() and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], i))
            i = j
        elif c.isascii() and c.isalpha():
            j = i
            while j < n and text[j].isascii() and (text[j].isalnum()):
                j += 1
            word = text[i:j]
            if word not in _WORDS:
                raise ParseError(i, "a keyword", word)
            toks.append(Token("word", word, i))
            i = j
        elif text.startswith("..", i):
            toks.append(Token("dots", "..", i))
            i += 2
        elif c in _PUNCT:
            toks.append(Token("punct", c, i))
            i += 1
        else:
            raise ParseError(i, "a valid character", c)
    toks.append(Token("end", "<end>", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind != "end"

    def expect(self, text: str) -> Token:
        t = self.tok
        if t.text != text or t.kind == "end":
            raise ParseError(t.pos, repr(text), t.text)
        self.i += 1
        return t

    def nat(self) -> int:
        t = self.tok
        if t.kind != "int":
            raise ParseError(t.pos, "a natural number", t.text)
        self.i += 1
        return int(t.text)

    def rat(self) -> Fraction:
        neg = False
        if self.at("-"):
            self.i += 1
            neg = True
        num = self.nat()
        den = 1
        if self.at("/"):
            self.i += 1
            t = self.tok
            den = self.nat()
            if den == 0:
                raise ParseError(t.pos, "a positive integer", t.text)
        q = Fraction(num, den)
        return -q if neg else q

    def finish(self) -> None:
        if self.tok.kind != "end":
            raise ParseError(self.tok.pos, "end of input", self.tok.text)

    # series

    def series(self) -> SeriesSpec:
        self.expect("sum")
        self.expect("(")
        self.expect("k")
        self.expect("=")
        start = self.nat()
        self.expect("..")
        self.expect("inf")
        self.expect(",")
        terms = [self.term(Fraction(1))]
        while self.at("+") or self.at("-"):
            sign = Fraction(1) if self.tok.text == "+" else Fraction(-1)
            self.i += 1
            terms.append(self.term(sign))
        self.expect(")")
        self.finish()
        return SeriesSpec.create(terms, start)

    def term(self, sign: Fraction) -> tuple:
        coeff = Fraction(1)
        if self.at("-"):
            nxt = self.toks[self.i + 1]
            if nxt.kind != "int":
                # bare leading minus: -log(k), -k^2*log(k)
                self.i += 1
                sign = -sign
        if self.tok.kind == "int" or self.at("-"):
            coeff = self.rat()
            self.expect("*")
        p = 0
        if self.at("k"):
            self.i += 1
            self.expect("^")
            p = self.nat()
            self.expect("*")
        self.expect("log")
        m = 1
        if self.at("^"):
            self.i += 1
            m = self.nat()
        self.expect("(")
        self.expect("k")
        z = Fraction(0)
        if self.at("+") or self.at("-"):
            neg = self.tok.text == "-"
            self.i += 1
            pos = self.tok.pos
            q = self.rat()
            z = -q if neg else q
            if z <= -1:
                raise SpecDomainError(pos, f"shift {format_rational(z)} must exceed -1", format_rational(z))
        self.expect(")")
        return (sign * coeff, p, z, m)

    # products

    def product(self) -> ProductSpec:
        t = self.tok
        if t.text not in ("melzak", "melzak2") or t.kind != "word":
            raise ParseError(t.pos, "'melzak' or 'melzak2'", t.text)
        self.i += 1
        self.expect("(")
        self.expect("x")
        self.expect("=")
        xpos = self.tok.pos
        x = self.rat()
        start: Optional[int] = None
        if t.text == "melzak2" and self.at(","):
            self.i += 1
            self.expect("start")
            self.expect("=")
            spos = self.tok.pos
            start = self.nat()
            if start < 1:
                raise SpecDomainError(spos, "start must be at least 1", "0")
        self.expect(")")
        self.finish()
        if t.text == "melzak":
            if x <= Fraction(-1, 2):
                raise SpecDomainError(xpos, "melzak needs x > -1/2", format_rational(x))
            return ProductSpec("melzak_linear", x, 1)
        start = 1 if start is None else start
        twox = 2 * abs(x)
        if twox.denominator == 1 and twox != 0 and start <= twox:
            raise SpecDomainError(
                xpos,
                f"factor k = {twox} vanishes at x = {format_rational(x)}; set start > {twox}",
                format_rational(x),
            )
        return ProductSpec("melzak_squared", x, start)


def parse_series(text: str) -> SeriesSpec:
    """Parse ``sum(k=..)`` text into a normalized :class:`SeriesSpec`."""
    return _Parser(text).series()


def parse_product(text: str) -> ProductSpec:
    """Parse ``melzak(..)`` or ``melzak2(..)`` text into a :class:`ProductSpec`."""
    return _Parser(text).product()


def _term_text(coeff: Fraction, p: int, z: Fraction, m: int, first: bool) -> str:
    mag = abs(coeff)
    parts = []
    if mag != 1 or (first and coeff < 0):
        parts.append(format_rational(mag) + "*")
    if p:
        parts.append(f"k^{p}*")
    parts.append("log" + (f"^{m}" if m != 1 else ""))
    if z > 0:
        parts.append(f"(k+{format_rational(z)})")
    elif z < 0:
        parts.append(f"(k-{format_rational(-z)})")
    else:
        parts.append("(k)")
    body = "".join(parts)
    if first:
        return ("-" if coeff < 0 else "") + body
    return ("- " if coeff < 0 else "+ ") + body


def unparse(spec: Union[SeriesSpec, ProductSpec]) -> str:
    """Canonical text that parses back to ``spec``."""
    if isinstance(spec, ProductSpec):
        x = format_rational(spec.x)
        if spec.kind == "melzak_linear":
            return f"melzak(x={x})"
        if spec.start_index == 1:
            return f"melzak2(x={x})"
        return f"melzak2(x={x}, start={spec.start_index})"
    if not spec.terms:
        return f"sum(k={spec.start_index}..inf, 0*log(k))"
    body = [
        _term_text(t.coeff, t.p, t.z, t.logpower, i == 0) for i, t in enumerate(spec.terms)
    ]
    return f"sum(k={spec.start_index}..inf, " + " ".join(body) + ")"
