"""Registry of identity and oracle checks behind ``multigamma verify``.

Each check returns a residual; it passes when the residual is finite and at
most the registered tolerance.  Exact checks report the number of
mismatches, so their tolerance is 0.  Checks run in registration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

__all__ = ["Check", "CheckResult", "SUITES", "checks", "run_suite", "run_check"]

SUITES = ("identities", "oracle", "all")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    tolerance: float
    fn: Callable[[], float]
    description: str


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    residual: float
    tolerance: float
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and math.isfinite(self.residual) and self.residual <= self.tolerance


_REGISTRY: list[Check] = []


def _check(suite: str, name: str, tolerance: float):
    def deco(fn: Callable[[], float]) -> Callable[[], float]:
        doc = (fn.__doc__ or "").strip().splitlines()
        _REGISTRY.append(Check(suite, name, tolerance, fn, doc[0] if doc else name))
        return fn

    return deco


def checks(suite: str = "all") -> list[Check]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return [c for c in _REGISTRY if suite == "all" or c.suite == suite]


def run_check(c: Check) -> CheckResult:
    try:
        r = float(c.fn())
    except Exception as exc:  # a crashing check is a failed check
        return CheckResult(c.suite, c.name, math.inf, c.tolerance, f"{type(exc).__name__}: {exc}")
    return CheckResult(c.suite, c.name, r, c.tolerance)


def run_suite(suite: str = "all") -> list[CheckResult]:
    return [run_check(c) for c in checks(suite)]


def _max_abs(pairs) -> float:
    return max(abs(a - b) for a, b in pairs)


def _count(bools) -> int:
    return sum(1 for ok in bools if not ok)


# -- exact combinatorics -----------------------------------------------------------


@_check("identities", "stirling_row_sums", 0)
def _stirling_rows():
    """sum_k [n,k] = n! for n <= 12."""
    from .exactcomb import stirling_cycle

    return _count(
        sum(stirling_cycle(n, k) for k in range(n + 1)) == math.factorial(n) for n in range(13)
    )


@_check("identities", "stirling_orthogonality", 0)
def _stirling_orth():
    """sum_j (-1)^(m+j) [j,m] {n,j} = delta_{m,n} for m, n <= 10."""
    from .exactcomb import stirling_cycle, stirling_subset

    return _count(
        sum((-1) ** (m + j) * stirling_cycle(j, m) * stirling_subset(n, j) for j in range(n + 1))
        == (1 if m == n else 0)
        for m in range(11)
        for n in range(11)
    )


@_check("identities", "bernoulli_endpoints", 0)
def _bernoulli_ends():
    """B_n(0) = B_n and B_n(1) = B_n for n != 1."""
    from .exactcomb import bernoulli_number, bernoulli_poly

    out = []
    for n in range(21):
        b = bernoulli_number(n)
        out.append(bernoulli_poly(n)(Fraction(0)) == b)
        if n != 1:
            out.append(bernoulli_poly(n)(Fraction(1)) == b)
    return _count(out)


@_check("identities", "pochhammer_concatenation", 0)
def _poch():
    """(x)_k (x+k)_m = (x)_(k+m) for k, m <= 8."""
    from .exactcomb import pochhammer

    x = Fraction(3, 7)
    return _count(
        pochhammer(x, k) * pochhammer(x + k, m) == pochhammer(x, k + m)
        for k in range(9)
        for m in range(9)
    )


@_check("identities", "p_sum_vs_binomial_form", 0)
def _p_forms():
    """Both explicit forms of P_{k,n} agree for k < n <= 10."""
    from .pqpoly import p_poly, p_poly_binomial_form

    return _count(p_poly(k, n) == p_poly_binomial_form(k, n) for n in range(1, 11) for k in range(n))


@_check("identities", "p_derivative_form", 0)
def _p_deriv():
    """The derivative form of P_{k,n} agrees with the sum form for n <= 6."""
    from .pqpoly import p_poly, p_poly_derivative_form

    return _count(p_poly(k, n) == p_poly_derivative_form(k, n) for n in range(1, 7) for k in range(n))


@_check("identities", "pq_orthogonality", 0)
def _pq_orth():
    """sum_j (-1)^(j-k) Q_{k,j} P_{j,n} = delta_{k,n-1} as polynomials, n <= 8."""
    from .pqpoly import orthogonality_poly

    return _count(
        orthogonality_poly(k, n) == (1 if k == n - 1 else 0) for n in range(1, 9) for k in range(n)
    )


@_check("identities", "p_at_one", 0)
def _p_one():
    """P_{k,n}(1) = [n-1, k] for n <= 10."""
    from .exactcomb import stirling_cycle
    from .pqpoly import p_poly

    return _count(
        p_poly(k, n)(Fraction(1)) == stirling_cycle(n - 1, k) for n in range(1, 11) for k in range(n)
    )


@_check("identities", "q_at_zero", 0)
def _q_zero():
    """Q_{k,n}(0) = {n+1, k+1} for n <= 10."""
    from .exactcomb import stirling_subset
    from .pqpoly import q_poly

    return _count(
        q_poly(k, n)(Fraction(0)) == stirling_subset(n + 1, k + 1) for n in range(11) for k in range(n + 1)
    )


EXAMPLE1 = (1, 16, 170, 1520, 12411, 96096)
EXAMPLE2 = (12, 60, 210, 630, 1736, 4536, 11430)


def example1_sequence(count: int = 6) -> list[Fraction]:
    """``2^(n-3) Q_{3,n}(1/2)`` for ``n = 3, 4, ...``."""
    from .pqpoly import q_poly

    return [Fraction(2) ** (n - 3) * q_poly(3, n)(Fraction(1, 2)) for n in range(3, 3 + count)]


def example2_sequence(count: int = 7) -> list[Fraction]:
    """Coefficient of ``z^2`` in ``2 Q_{2,n}(1-z)`` for ``n = 4, 5, ...``."""
    from .exactcomb import RationalPolynomial
    from .pqpoly import q_poly

    one_minus_z = RationalPolynomial([1, -1])
    return [2 * q_poly(2, n).compose(one_minus_z).coeff(2) for n in range(4, 4 + count)]


@_check("identities", "q_sequence_a021424", 0)
def _ex1():
    """2^(n-3) Q_{3,n}(1/2) gives 1, 16, 170, ... and matches (7^n - 3 5^n + 3^(n+1) - 1)/48."""
    from .pqpoly import q_poly

    seq = example1_sequence()
    closed = [
        Fraction(2) ** (n - 3) * q_poly(3, n)(Fraction(1, 2)) * 48 == 7**n - 3 * 5**n + 3 ** (n + 1) - 1
        for n in range(3, 11)
    ]
    return _count([a == b for a, b in zip(seq, EXAMPLE1)] + closed)


@_check("identities", "q_sequence_a000554", 0)
def _ex2():
    """[z^2] 2 Q_{2,n}(1-z) gives 12, 60, 210, ... for n = 4..10."""
    return _count(a == b for a, b in zip(example2_sequence(), EXAMPLE2))


# -- Hurwitz zeta ---------------------------------------------------------------


@_check("identities", "hurwitz_shift_identity", 1e-13)
def _shift():
    """zeta(s,z) - zeta(s,z+1) = z^-s (relative to max(1, z^-s))."""
    from .hurwitz import hurwitz_zeta

    out = []
    for s in (-3.5, -1.0, 0.5, 2.0):
        for z in (0.3, 1.0, 7.0):
            d = hurwitz_zeta(s, z) - hurwitz_zeta(s, z + 1)
            out.append(abs(d - z**-s) / max(1.0, z**-s))
    return max(out)


@_check("identities", "zeta_prime_shift_identity", 1e-12)
def _shift_deriv():
    """zeta'(0,z) - zeta'(0,z+1) = -log z at z = 3."""
    from .hurwitz import zeta_sderiv_neg

    return abs(zeta_sderiv_neg(0, 3.0) - zeta_sderiv_neg(0, 4.0) + math.log(3.0))


@_check("identities", "zeta_prime_vs_finite_differences", 1e-8)
def _sderiv_fd():
    """zeta'(-lam, z) vs central differences, lam <= 4 (relative to max(1, |value|))."""
    from .hurwitz import zeta_sderiv_neg
    from .oracle import finite_difference_sderiv

    out = []
    for lam in range(5):
        for z in (0.5, 1.0, 2.0, 10.0):
            v = zeta_sderiv_neg(lam, z)
            out.append(abs(v - finite_difference_sderiv(lam, z)) / max(1.0, abs(v)))
    return max(out)


@_check("identities", "asymptotic_coefficients", 0)
def _asymp():
    """The expansion at lam = 0, 1 has the classical coefficients."""
    from .hurwitz import prop1_expansion

    F = Fraction
    want0 = {(F(1), 1): F(1), (F(1), 0): F(-1), (F(0), 1): F(-1, 2)}
    want1 = {(F(2), 1): F(1, 2), (F(1), 1): F(-1, 2), (F(0), 1): F(1, 12), (F(2), 0): F(-1, 4), (F(0), 0): F(1, 12)}
    bad = 0
    for lam, want, cut in ((0, want0, -1), (1, want1, -2)):
        got = {(p, b): c for p, b, c in prop1_expansion(lam, 1).terms if p > cut}
        bad += got != want
    return bad


@_check("identities", "asymptotic_truncation", 1e-9)
def _asymp_num():
    """Expansion with r = 3 at z = 50 vs finite differences, lam = 0..2 (relative)."""
    from .hurwitz import prop1_expansion
    from .oracle import finite_difference_sderiv

    out = []
    for lam in range(3):
        fd = finite_difference_sderiv(lam, 50.0)
        out.append(abs(prop1_expansion(lam, 3).evaluate(50.0) - fd) / max(1.0, abs(fd)))
    return max(out)


@_check("identities", "asymptotic_error_decreases_with_r", 0)
def _asymp_mono():
    """|truth - expansion_r| is non-increasing for r = 1..4 (lam = 1, z = 20)."""
    from .hurwitz import prop1_expansion, zeta_sderiv_neg

    truth = zeta_sderiv_neg(1, 20.0)
    errs = [abs(truth - prop1_expansion(1, r).evaluate(20.0)) for r in range(1, 5)]
    # below 1e-15 absolute the sequence is at rounding level
    return _count(b <= a or b < 1e-13 for a, b in zip(errs, errs[1:]))


@_check("identities", "stieltjes_laurent", 1e-6)
def _stieltjes():
    """zeta(1.01) from the Laurent series with gamma_0..gamma_2."""
    from .hurwitz import hurwitz_zeta, stieltjes

    e = 0.01
    lau = 1 / e + stieltjes(0) - stieltjes(1) * e + stieltjes(2) * e * e / 2
    return abs(lau - hurwitz_zeta(1 + e, 1.0))


# -- multiple gamma ------------------------------------------------------------------


@_check("identities", "gamma_recurrence", 1e-9)
def _gdef():
    """log Gamma_{n+1}(z+1) - log Gamma_{n+1}(z) + log Gamma_n(z) = 0, n <= 3."""
    from .gammas import log_multiple_gamma as lg

    return max(
        abs(lg(n + 1, z + 1) - lg(n + 1, z) + lg(n, z)) for n in (1, 2, 3) for z in (0.5, 1.3, 2.0, 5.0)
    )


@_check("identities", "log_gamma_vs_lgamma", 1e-10)
def _lg1():
    """log Gamma_1(z) vs math.lgamma on [0.5, 20]."""
    from .gammas import log_multiple_gamma

    zs = [0.5 + 0.25 * i for i in range(79)]
    return _max_abs((log_multiple_gamma(1, z), math.lgamma(z)) for z in zs)


@_check("identities", "multiple_zeta_derivative_form", 1e-6)
def _mz_form():
    """-d/ds zeta_2(0,z) + R_2 - z R_1 equals log G(z) at z = 1.5, 2.5."""
    from .gammas import log_barnes_g, multiple_zeta, r_n
    from .oracle import _central

    def dz(z):
        f = lambda s: multiple_zeta(2, s, z)  # noqa: E731
        d = [_central(f, 0.0, 1, 1 / 64 / 2**i) for i in range(3)]
        r = [(4 * d[i + 1] - d[i]) / 3 for i in range(2)]
        return (16 * r[1] - r[0]) / 15

    r1, r2 = r_n(1).value, r_n(2).value
    return _max_abs((-dz(z) + r2 - z * r1, log_barnes_g(z)) for z in (1.5, 2.5))


@_check("identities", "gamma_hurwitz_roundtrip", 1e-9)
def _roundtrip():
    """zeta'(-n,z) - zeta'(-n) rebuilt from log Gamma_1..Gamma_(n+1), n <= 4."""
    from .gammas import hurwitz_deriv_from_gammas
    from .hurwitz import riemann_zeta_deriv_neg, zeta_sderiv_neg

    return _max_abs(
        (hurwitz_deriv_from_gammas(n, z), zeta_sderiv_neg(n, z) - riemann_zeta_deriv_neg(n))
        for n in range(5)
        for z in (0.5, 1.3, 2.0, 5.0)
    )


@_check("identities", "triple_gamma_hurwitz", 1e-9)
def _triple():
    """zeta'(-2,z) - zeta'(-2) = 2 log Gamma_3 + (3-2z) log G + (1-z)^2 log Gamma."""
    from .gammas import log_barnes_g, log_multiple_gamma
    from .hurwitz import riemann_zeta_deriv_neg, zeta_sderiv_neg

    out = []
    for z in (0.5, 1.3, 2.0, 5.0):
        lhs = zeta_sderiv_neg(2, z) - riemann_zeta_deriv_neg(2)
        rhs = 2 * log_multiple_gamma(3, z) + (3 - 2 * z) * log_barnes_g(z) + (1 - z) ** 2 * math.lgamma(z)
        out.append(abs(lhs - rhs))
    return max(out)


# -- regularized series ----------------------------------------------------------


DILCHER_TEXT = "sum(k=1..inf, log(k+1/2) - 2*log(k) + log(k-1/2))"


def d2_printed() -> float:
    from .hurwitz import stieltjes

    g = stieltjes(0)
    return math.pi**2 / 12 + math.log(math.pi) ** 2 - 3 * math.log(2) ** 2 - g * g - 2 * stieltjes(1)


def d3_printed() -> float:
    from .hurwitz import zeta_kth_deriv_at0

    l2 = math.log(2)
    return 3 * d2_printed() * l2 + 2 * zeta_kth_deriv_at0(3, 1.0) + 9 * math.log(2 * math.pi) * l2**2 + math.log(4) ** 3


@_check("identities", "dilcher_profile_cancels", 0)
def _dcancel():
    """Growing terms of the Dilcher partial sums cancel exactly, k = 1..4."""
    from .seriesengine import dilcher_spec, evaluate_series

    return _count(evaluate_series(dilcher_spec(k)).convergent for k in range(1, 5))


@_check("identities", "dilcher_closed_forms", 1e-7)
def _dclosed():
    """D_1 = log(2/pi); D_2 and D_3 match their printed expressions."""
    from .seriesengine import dilcher_spec, dilcher_sum, evaluate_series

    out = [abs(dilcher_sum(1).value - math.log(2 / math.pi))]
    out.append(abs(dilcher_sum(2).value - d2_printed()))
    out.append(abs(dilcher_sum(3).value - d3_printed()))
    for k in (1, 2, 3, 4):
        out.append(abs(dilcher_sum(k).value - evaluate_series(dilcher_spec(k)).value))
    return max(out)


@_check("identities", "series_linearity", 1e-12)
def _linear():
    """evaluate(aA + bB) = a evaluate(A) + b evaluate(B) for convergent A, B."""
    from .seriesengine import dilcher_spec, evaluate_series
    from .specs import SeriesSpec

    a, b = Fraction(3, 2), Fraction(-2, 5)
    A = dilcher_spec(1)
    B = SeriesSpec.create([(1, 1, 0, 1), (-2, 1, Fraction(1, 3), 1), (1, 1, Fraction(2, 3), 1)])
    both = A.scale(a) + B.scale(b)
    lhs = evaluate_series(both).value
    return abs(lhs - (float(a) * evaluate_series(A).value + float(b) * evaluate_series(B).value))


@_check("identities", "zeta_power_series", 1e-9)
def _zps():
    """sum (-z)^k zeta(k)/(k+r-1) vs its Barnes G / triple gamma closed form."""
    from .seriesengine import zeta_power_series, zeta_power_series_direct

    cases = [(z, 2) for z in (0.3, 0.5, -0.4)] + [(z, 3) for z in (1 / 3, -0.25)]
    return max(abs(zeta_power_series(z, r) - zeta_power_series_direct(z, r)) for z, r in cases)


# -- products and reflection ---------------------------------------------------------


def melzak_printed() -> dict[Fraction, float]:
    from .constants import catalan_constant
    from .gammas import glaisher_log

    A = math.exp(glaisher_log())
    G = catalan_constant()
    return {
        Fraction(1): math.pi / (2 * math.e),
        Fraction(1, 2): A**6 / (math.e * math.sqrt(math.pi) * 2 ** (1 / 6)),
        Fraction(2): 3 * math.pi**2 / (16 * math.e**2),
        Fraction(-1, 4): A**3 * math.exp(-G / math.pi) * math.sqrt(math.pi) * 2 ** (1 / 6) / math.gamma(0.25),
    }


def melzak_squared_printed() -> dict[tuple[Fraction, int], float]:
    from .constants import catalan_constant
    from .hurwitz import hurwitz_zeta

    z3 = hurwitz_zeta(3.0, 1.0)
    G = catalan_constant()
    return {
        (Fraction(1, 4), 1): math.exp(1 / 8 - 2 * G / math.pi + 7 * z3 / (2 * math.pi**2)),
        (Fraction(1, 2), 2): math.pi / 4 * math.exp(0.5 + 7 * z3 / math.pi**2),
    }


@_check("identities", "melzak_printed_constants", 1e-12)
def _mprinted():
    """Closed forms at x = 1, 1/2, 2, -1/4 match their constant expressions (relative)."""
    from .products import melzak_product

    return max(abs(melzak_product(x) / v - 1) for x, v in melzak_printed().items())


@_check("identities", "melzak_squared_printed_constants", 1e-12)
def _m2printed():
    """Squared product at x = 1/4 and x = 1/2 (from k = 2) vs constant expressions."""
    from .products import melzak_squared_product

    return max(abs(melzak_squared_product(float(x), s) / v - 1) for (x, s), v in melzak_squared_printed().items())


@_check("identities", "melzak_squared_evenness", 1e-10)
def _even():
    """melzak_squared_product(x) = melzak_squared_product(-x)."""
    from .products import melzak_squared_product

    return max(abs(melzak_squared_product(x) - melzak_squared_product(-x)) for x in (0.1, 0.3, 0.45, 0.7))


@_check("identities", "polylog_vs_gamma_form", 1e-7)
def _cor():
    """Polylogarithmic form of the squared product vs the G / Gamma_3 form."""
    from .products import corollary_product, melzak_squared_product

    return max(abs(corollary_product(x) - melzak_squared_product(x)) for x in (0.1, 0.25, 0.3, 0.45))


@_check("identities", "reflection_formulas", 1e-7)
def _refl():
    """Barnes G and triple gamma reflection formulas at z = 1/4, 1/2."""
    from .gammas import log_barnes_g
    from .products import barnes_reflection, gamma3_reflection

    out = []
    for z in (0.25, 0.5):
        out.append(abs(barnes_reflection(z) - (log_barnes_g(1 + z) - log_barnes_g(1 - z))))
        out.append(gamma3_reflection(z))
    return max(out)


@_check("identities", "polylog_special_values", 1e-9)
def _poly():
    """Li_2(i) - Li_2(-i) = 2iG and Li_3(1) - Li_3(-1) = 7 zeta(3)/4."""
    from .constants import catalan_constant
    from .hurwitz import hurwitz_zeta
    from .products import polylog_unit_circle

    a = complex(*polylog_unit_circle(2, math.pi / 2)) - complex(*polylog_unit_circle(2, -math.pi / 2))
    b = complex(*polylog_unit_circle(3, 0.0)) - complex(*polylog_unit_circle(3, math.pi))
    return max(abs(a - 2j * catalan_constant()), abs(b - 7 * hurwitz_zeta(3.0, 1.0) / 4))


# -- parser ----------------------------------------------------------------------


PARSER_CORPUS = (
    "sum(k=1..inf, log(k))",
    DILCHER_TEXT,
    "sum(k=1..inf, log^2(k+1/2) - 2*log^2(k) + log^2(k-1/2))",
    "sum(k=1..inf, log^3(k+1/2) - 2*log^3(k) + log^3(k-1/2))",
    "sum(k=2..inf, log(k-1/2))",
    "sum(k=0..inf, log(k+1))",
    "sum(k=1..inf, k^2*log(k+1/3))",
    "sum(k=1..inf, -log(k))",
    "sum(k=1..inf, -3/4*k^3*log^2(k-1/2))",
    "sum(k=3..inf, 2*log(k) - log(k-1/2) - log(k+1/2))",
    "sum(k=1..inf, log(k+0))",
    "sum(k=1..inf, 0*log(k))",
    "sum ( k = 1 .. inf , log ( k + 1 / 2 ) )",
    "sum(k=1..inf, k^0*log^1(k))",
    "sum(k=1..inf, 7/3*log(k+5/2) + 1*log(k))",
    "sum(k=10..inf, k^1*log^4(k-9/10))",
    "sum(k=1..inf, log(k+1/2) + log(k+1/2))",
    "sum(k=1..inf, 2*log(k+1/2))",
    "sum(k=1..inf, -1*log(k) + log(k))",
    "sum(k=1..inf, k^2*log(k) - 2*k^2*log(k+1) + k^2*log(k+2))",
    "sum(k=1..inf, 1/2*log(k-1/2) - 1/2*log(k+1/2))",
    "sum(k=1..inf, -2*log(k+3) - -2*log(k+3))",
)


@_check("identities", "parser_roundtrip", 0)
def _roundtrip_parse():
    """unparse(parse(text)) parses back to the same spec over the corpus."""
    from .sparser import parse_series, unparse

    out = []
    for text in PARSER_CORPUS:
        spec = parse_series(text)
        out.append(parse_series(unparse(spec)) == spec)
    return _count(out)


@_check("identities", "parser_normalization", 0)
def _norm():
    """Equivalent spellings produce identical normalized specs."""
    from .sparser import parse_series

    pairs = [
        ("sum(k=1..inf, log(k+1/2)+log(k+1/2))", "sum(k=1..inf, 2*log(k+1/2))"),
        ("sum(k=1..inf, log(k-1/2) + log(k))", "sum(k=1..inf,log(k)+log(k-2/4))"),
        ("sum(k=1..inf, -log(k))", "sum(k=1..inf, -1*log(k))"),
    ]
    return _count(parse_series(a) == parse_series(b) for a, b in pairs)


@_check("identities", "dilcher_text_end_to_end", 1e-7)
def _d1_text():
    """The D_1 text form parses and evaluates to log(2/pi)."""
    from .seriesengine import evaluate_series
    from .sparser import parse_series

    return abs(evaluate_series(parse_series(DILCHER_TEXT)).value - math.log(2 / math.pi))


# -- oracle comparisons ------------------------------------------------------------


@_check("oracle", "melzak_vs_oracle", 1e-6)
def _moracle():
    """melzak_product vs extrapolated truncated products, x in {0.1, 0.25, 0.45, 1/2, 1, 2, -1/4}."""
    from .oracle import partial_product_extrapolated
    from .products import melzak_product
    from .specs import ProductSpec

    xs = [Fraction(1, 10), Fraction(1, 4), Fraction(9, 20), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(-1, 4)]
    return max(
        abs(melzak_product(float(x)) - partial_product_extrapolated(ProductSpec("melzak_linear", x)).extrapolated)
        for x in xs
    )


@_check("oracle", "melzak_squared_vs_oracle", 1e-5)
def _m2oracle():
    """Squared product at x = 1/4 and x = 1/2 (from k = 2) vs extrapolated products."""
    from .oracle import partial_product_extrapolated
    from .products import melzak_squared_product
    from .specs import ProductSpec

    out = []
    for x, s in ((Fraction(1, 4), 1), (Fraction(1, 2), 2), (Fraction(3, 10), 1)):
        o = partial_product_extrapolated(ProductSpec("melzak_squared", x, s)).extrapolated
        out.append(abs(melzak_squared_product(float(x), s) - o))
    return max(out)


@_check("oracle", "melzak_parity_shift", 1e-6)
def _parity():
    """Truncating at 2N+1 instead of 2N multiplies the product by a factor tending to e^(2x)."""
    from .oracle import extrapolate

    out = []
    for x in (0.25, 1.0, 2.0):
        nodes = [2 * 1024 * 2**l for l in range(4)]
        # the extra factor is (1 + 2x/(2N+1))^(2N+1)
        vals = [(n + 1) * math.log1p(2 * x / (n + 1)) for n in nodes]
        v, _ = extrapolate(nodes, vals, [(-float(i), 0) for i in range(1, 5)], 3)
        out.append(abs(math.exp(v) - math.exp(2 * x)))
    return max(out)


@_check("oracle", "dilcher_vs_oracle", 1e-6)
def _doracle():
    """D_1..D_3 closed forms vs extrapolated partial sums."""
    from .oracle import partial_sum_extrapolated
    from .seriesengine import dilcher_spec, dilcher_sum

    return max(
        abs(dilcher_sum(k).value - partial_sum_extrapolated(dilcher_spec(k)).extrapolated) for k in (1, 2, 3)
    )


@_check("oracle", "convergent_series_vs_oracle", 1e-7)
def _soracle():
    """Assorted convergent series: regularized constant vs extrapolated partial sums."""
    from .oracle import partial_sum_extrapolated
    from .seriesengine import evaluate_series
    from .sparser import parse_series

    texts = [
        "sum(k=1..inf, log(k) - 2*log(k+1) + log(k+2))",
        "sum(k=1..inf, k^1*log(k) - 3*k^1*log(k+1/3) + 3*k^1*log(k+2/3) - k^1*log(k+1))",
        "sum(k=2..inf, log(k-1/2) - 2*log(k) + log(k+1/2))",
    ]
    out = []
    for t in texts:
        spec = parse_series(t)
        out.append(abs(evaluate_series(spec).value - partial_sum_extrapolated(spec).extrapolated))
    return max(out)


@_check("oracle", "extrapolation_error_shrinks", 0)
def _shrinks():
    """Estimated error is non-increasing in the number of levels on control specs."""
    from .oracle import partial_product_extrapolated, partial_sum_extrapolated
    from .seriesengine import dilcher_spec
    from .specs import ProductSpec

    bad = 0
    for report in (
        lambda l: partial_sum_extrapolated(dilcher_spec(1), 512, l),
        lambda l: partial_product_extrapolated(ProductSpec("melzak_linear", Fraction(1)), 1024, l),
    ):
        errs = [report(l).estimated_error for l in (1, 2, 3)]
        bad += _count(b <= a or b < 1e-13 for a, b in zip(errs, errs[1:]))
    return bad
