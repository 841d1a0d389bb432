"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Argument outside the domain where a function is defined."""


class PoleError(DomainError):
    """Evaluation at a pole (e.g. the Hurwitz zeta function at s = 1)."""


class UnsupportedError(ValueError):
    """Valid mathematically, but outside what this implementation supports."""


class OracleError(RuntimeError):
    """A brute-force oracle refused or failed to produce a trustworthy value."""


class ParseError(ValueError):
    """Syntax error in a series or product specification.

    Attributes:
        position: character offset of the offending token.
        expected: description of what the parser wanted.
        found: text of the token actually present (``"<end>"`` at end of input).
    """

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at position {position}: expected {expected}, found {found!r}")


class SpecDomainError(ParseError, DomainError):
    """Well-formed input whose parameters violate a domain restriction."""

    def __init__(self, position: int, message: str, found: str = ""):
        self.position = position
        self.expected = message
        self.found = found
        ValueError.__init__(self, f"at position {position}: {message}")
