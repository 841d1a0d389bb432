from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multigamma.asymptotic import AsymptoticExpansion, format_rational, sum_expansions, zero


def test_normalization_merges_and_sorts():
    e = AsymptoticExpansion("N", ((0, 0, F(1)), (1, 1, F(2)), (0, 0, F(-1)), (1, 0, F(3))))
    assert e.terms == ((F(1), 1, F(2)), (F(1), 0, F(3)))
    assert e.constant() == 0


def test_growing_and_constant():
    e = AsymptoticExpansion("N", ((1, 1, F(1)), (0, 1, F(-1, 2)), (0, 0, F(5)), (-1, 0, F(1, 12))))
    assert e.growing().keys() == [(F(1), 1), (F(0), 1)]
    assert e.constant() == 5


def test_format():
    e = AsymptoticExpansion("N", ((1, 1, F(1)), (1, 0, F(-1)), (0, 1, F(1, 2))))
    assert e.format() == "N log N - N + (1/2) log N"
    assert zero().format() == "0"
    assert format_rational(F(-3, 4)) == "-3/4"


def test_truncate():
    e = AsymptoticExpansion("z", ((1, 0, F(1)), (-1, 0, F(1)), (-3, 0, F(1))))
    t = e.truncate(-2)
    assert t.keys() == [(F(1), 0), (F(-1), 0)]
    assert t.remainder_order == -2


@given(st.fractions(min_value=-3, max_value=3, max_denominator=4), st.integers(1, 3), st.integers(0, 2))
def test_shift_matches_numerics(c, p, b):
    e = AsymptoticExpansion("x", ((p, b, F(1)),))
    s = e.shift(c, 8)
    N = 400.0
    assert s.evaluate(N) == pytest.approx(e.evaluate(N + float(c)), rel=1e-13, abs=1e-10)


def test_sum_expansions_cancels():
    a = AsymptoticExpansion("N", ((1, 1, F(1)),))
    assert sum_expansions([a, a.scale(-1)]).terms == ()
