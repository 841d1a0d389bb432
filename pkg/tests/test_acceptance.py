"""The ten acceptance criteria, each at its stated tolerance.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""

import math
import random
import time
from fractions import Fraction

from multigamma import (
    corollary_product,
    dilcher_sum,
    evaluate_series,
    hurwitz_deriv_from_gammas,
    log_barnes_g,
    log_multiple_gamma,
    melzak_product,
    melzak_squared_product,
    parse_product,
    parse_series,
    partial_product_extrapolated,
    partial_sum_extrapolated,
    polylog_unit_circle,
    prop1_expansion,
    riemann_zeta_deriv_neg,
    unparse,
    zeta_sderiv_neg,
)
from multigamma.constants import catalan_constant
from multigamma.errors import ParseError
from multigamma.exactcomb import stirling_cycle, stirling_subset
from multigamma.hurwitz import hurwitz_zeta
from multigamma.oracle import finite_difference_sderiv
from multigamma.pqpoly import orthogonality_poly, p_poly, q_poly
from multigamma.products import barnes_reflection, gamma3_reflection
from multigamma.seriesengine import dilcher_spec, zeta_power_series, zeta_power_series_direct
from multigamma.specs import ProductSpec
from multigamma.verification import (
    DILCHER_TEXT,
    EXAMPLE1,
    EXAMPLE2,
    PARSER_CORPUS,
    d2_printed,
    d3_printed,
    example1_sequence,
    example2_sequence,
    melzak_printed,
)


def _finish(criterion, n, title, checks):
    """``checks`` maps a label to (measured, bound); passes when every measured <= bound."""
    bad = [k for k, (m, b) in checks.items() if not (math.isfinite(m) and m <= b)]
    worst = max(checks.items(), key=lambda kv: kv[1][0] / kv[1][1] if kv[1][1] else kv[1][0])
    detail = f"worst {worst[0]} = {worst[1][0]:.2e} (bound {worst[1][1]:.0e})"
    if bad:
        detail = "failed " + ", ".join(bad) + "; " + detail
    criterion(n, title, not bad, detail)
    assert not bad, detail


def _melzak_oracle(x, start=1, kind="melzak_linear"):
    return partial_product_extrapolated(ProductSpec(kind, Fraction(x), start), N=1024, levels=3).extrapolated


def test_01_melzak_base_case(criterion):
    t0 = time.perf_counter()
    closed = melzak_product(1.0)
    oracle = _melzak_oracle(1)
    elapsed = time.perf_counter() - t0
    _finish(
        criterion,
        1,
        "Melzak product at x=1 is pi/(2e)",
        {
            "|closed - pi/(2e)|": (abs(closed - math.pi / (2 * math.e)), 1e-12),
            "|closed - oracle|": (abs(closed - oracle), 1e-6),
            "runtime s": (elapsed, 1.0),
        },
    )


def test_02_melzak_particular_cases(criterion):
    printed = melzak_printed()
    checks = {}
    for x in (Fraction(1, 2), Fraction(2), Fraction(-1, 4)):
        closed = melzak_product(float(x))
        checks[f"printed x={x}"] = (abs(closed - printed[x]), 1e-6)
        checks[f"oracle x={x}"] = (abs(closed - _melzak_oracle(x)), 1e-6)
    _finish(criterion, 2, "Melzak cases x = 1/2, 2, -1/4 (A, Catalan, Gamma(1/4))", checks)


def test_03_squared_products(criterion):
    checks = {
        "oracle x=1/4": (abs(melzak_squared_product(0.25) - _melzak_oracle(Fraction(1, 4), 1, "melzak_squared")), 1e-5),
        "oracle x=1/2 from k=2": (
            abs(melzak_squared_product(0.5, 2) - _melzak_oracle(Fraction(1, 2), 2, "melzak_squared")),
            1e-5,
        ),
    }
    for x in (0.1, 0.25, 0.3, 0.45):
        checks[f"polylog form x={x}"] = (abs(corollary_product(x) - melzak_squared_product(x)), 1e-7)
    _finish(criterion, 3, "squared Melzak products vs oracle and polylog form", checks)


def test_04_dilcher_sums(criterion):
    d1, d2, d3 = (dilcher_sum(k).value for k in (1, 2, 3))
    o2 = partial_sum_extrapolated(dilcher_spec(2), N=512, levels=3).extrapolated
    _finish(
        criterion,
        4,
        "Dilcher sums D_1, D_2, D_3",
        {
            "D1 - log(2/pi)": (abs(d1 - math.log(2 / math.pi)), 1e-9),
            "D2 - printed": (abs(d2 - d2_printed()), 1e-7),
            "D2 - oracle": (abs(d2 - o2), 1e-6),
            "D3 - printed": (abs(d3 - d3_printed()), 1e-6),
        },
    )


def test_05_exact_identities(criterion):
    orth = sum(orthogonality_poly(k, n) != (1 if k == n - 1 else 0) for n in range(1, 9) for k in range(n))
    p1 = sum(p_poly(k, n)(Fraction(1)) != stirling_cycle(n - 1, k) for n in range(1, 11) for k in range(n))
    q0 = sum(q_poly(k, n)(Fraction(0)) != stirling_subset(n + 1, k + 1) for n in range(11) for k in range(n + 1))
    ex1 = sum(a != b for a, b in zip(example1_sequence(), EXAMPLE1)) + (len(example1_sequence()) != 6)
    ex2 = sum(a != b for a, b in zip(example2_sequence(), EXAMPLE2)) + (len(example2_sequence()) != 7)
    _finish(
        criterion,
        5,
        "exact combinatorial identities (mismatch counts)",
        {
            "orthogonality n<=8": (orth, 0),
            "P(1) n<=10": (p1, 0),
            "Q(0) n<=10": (q0, 0),
            "A021424": (ex1, 0),
            "A000554": (ex2, 0),
        },
    )


def test_06_multiple_gamma_structure(criterion):
    zs = (0.5, 1.3, 2.0, 5.0)
    lg = log_multiple_gamma
    rec = max(abs(lg(n + 1, z + 1) - lg(n + 1, z) + lg(n, z)) for n in (1, 2, 3) for z in zs)
    triple = max(
        abs(
            zeta_sderiv_neg(2, z)
            - riemann_zeta_deriv_neg(2)
            - (2 * lg(3, z) + (3 - 2 * z) * log_barnes_g(z) + (1 - z) ** 2 * math.lgamma(z))
        )
        for z in zs
    )
    rt = max(
        abs(hurwitz_deriv_from_gammas(n, z) - (zeta_sderiv_neg(n, z) - riemann_zeta_deriv_neg(n)))
        for n in range(4)
        for z in zs
    )
    _finish(
        criterion,
        6,
        "Gamma_n recurrence, triple gamma identity, round trip",
        {"recurrence": (rec, 1e-9), "triple gamma": (triple, 1e-9), "round trip": (rt, 1e-9)},
    )


def test_07_asymptotics(criterion):
    F = Fraction
    want = {
        0: {(F(1), 1): F(1), (F(0), 1): F(-1, 2), (F(1), 0): F(-1)},
        1: {(F(2), 1): F(1, 2), (F(1), 1): F(-1, 2), (F(0), 1): F(1, 12), (F(2), 0): F(-1, 4), (F(0), 0): F(1, 12)},
    }
    # terms above the stated O(1/N) and O(1/N^2) remainders
    cut = {0: -1, 1: -2}
    mismatch = 0
    for lam in (0, 1):
        got = {(p, b): c for p, b, c in prop1_expansion(lam, 1).terms if p > cut[lam]}
        mismatch += got != want[lam]
    trunc = max(abs(prop1_expansion(lam, 3).evaluate(50.0) - finite_difference_sderiv(lam, 50.0)) for lam in (0, 1))
    _finish(
        criterion,
        7,
        "large-z expansion at lambda = 0, 1",
        {"coefficient mismatches": (mismatch, 0), "truncation at z=50, r=3": (trunc, 1e-9)},
    )


def test_08_zeta_power_series(criterion):
    checks = {}
    for z in (0.3, 0.5, -0.4):
        checks[f"G sum z={z}"] = (abs(zeta_power_series(z, 2) - zeta_power_series_direct(z, 2)), 1e-9)
    for z in (1 / 3, -0.25):
        checks[f"Gamma_3 sum z={z:.4g}"] = (abs(zeta_power_series(z, 3) - zeta_power_series_direct(z, 3)), 1e-9)
    _finish(criterion, 8, "zeta power series vs Barnes G / triple gamma", checks)


def test_09_reflection_and_polylogs(criterion):
    checks = {}
    for z in (0.25, 0.5):
        checks[f"G reflection z={z}"] = (abs(barnes_reflection(z) - (log_barnes_g(1 + z) - log_barnes_g(1 - z))), 1e-7)
        checks[f"Gamma_3 reflection z={z}"] = (gamma3_reflection(z), 1e-7)
    li2 = complex(*polylog_unit_circle(2, math.pi / 2)) - complex(*polylog_unit_circle(2, -math.pi / 2))
    li3 = complex(*polylog_unit_circle(3, 0.0)) - complex(*polylog_unit_circle(3, math.pi))
    checks["Li2(i) - Li2(-i) - 2iG"] = (abs(li2 - 2j * catalan_constant()), 1e-9)
    checks["Li3(1) - Li3(-1) - 7 zeta(3)/4"] = (abs(li3 - 7 * hurwitz_zeta(3.0, 1.0) / 4), 1e-9)
    _finish(criterion, 9, "reflection formulas and polylog identities", checks)


def _fuzz_inputs(count, seed=20261014):
    rng = random.Random(seed)
    alphabet = "sumk=.inf,()+-*^/log0123456789 melzak2xstart"
    out = []
    for i in range(count):
        mode = i % 3
        if mode == 0:
            out.append(bytes(rng.randrange(256) for _ in range(rng.randrange(40))).decode("latin-1"))
        elif mode == 1:
            out.append("".join(rng.choice(alphabet) for _ in range(rng.randrange(60))))
        else:
            base = list(rng.choice(PARSER_CORPUS + ("melzak(x=1)", "melzak2(x=1/2, start=2)")))
            for _ in range(rng.randrange(1, 4)):
                op = rng.randrange(3)
                pos = rng.randrange(len(base) + 1)
                if op == 0 and base:
                    del base[min(pos, len(base) - 1)]
                elif op == 1:
                    base.insert(pos, rng.choice(alphabet))
                elif base:
                    base[min(pos, len(base) - 1)] = rng.choice(alphabet)
            out.append("".join(base))
    return out


def test_10_parser(criterion):
    roundtrip = 0
    for text in PARSER_CORPUS:
        spec = parse_series(text)
        roundtrip += parse_series(unparse(spec)) != spec
    crashes = 0
    accepted = 0
    for text in _fuzz_inputs(10_000):
        for parse in (parse_series, parse_product):
            try:
                spec = parse(text)
                accepted += 1
                # accepted inputs must also round-trip
                crashes += parse(unparse(spec)) != spec
            except ParseError:
                pass
            except Exception:
                crashes += 1
    d1 = abs(evaluate_series(parse_series(DILCHER_TEXT)).value - math.log(2 / math.pi))
    _finish(
        criterion,
        10,
        f"parser round trip ({len(PARSER_CORPUS)} inputs), fuzz (10^4 inputs, {accepted} accepted), D_1 text",
        {"round-trip mismatches": (roundtrip, 0), "fuzz crashes": (crashes, 0), "D1 end to end": (d1, 1e-7)},
    )
