import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equigraph.exact import (
    ExactValue,
    Surd,
    exact_sum,
    parse_surd,
    surd,
    surd_abs,
    surd_compare,
    surd_normalize,
)

RADICANDS = [1, 2, 3, 5, 6, 7, 13, 17]

fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=12)
surds_st = st.builds(Surd, fractions_st, fractions_st, st.sampled_from(RADICANDS))


def test_normalize_extracts_square_factors():
    s = surd_normalize(0, 1, 12)
    assert (s.a, s.b, s.d) == (0, 2, 3)


def test_normalize_collapses_zero_coefficient():
    s = surd_normalize(3, 0, 7)
    assert (s.a, s.b, s.d) == (3, 0, 1)


def test_normalize_golden_ratio_style_value():
    s = surd_normalize(Fraction(-1, 2), Fraction(1, 2), 5)
    assert (s.a, s.b, s.d) == (Fraction(-1, 2), Fraction(1, 2), 5)
    assert 0.618 < float(s) < 0.619


def test_normalize_folds_d_one_and_zero():
    assert surd_normalize(2, 3, 1) == Surd(5)
    assert surd_normalize(2, 3, 0) == Surd(2)
    assert surd_normalize(0, 1, 4) == Surd(2)


@given(surds_st)
def test_normalize_idempotent(s):
    again = surd_normalize(s.a, s.b, s.d)
    assert (again.a, again.b, again.d) == (s.a, s.b, s.d)


def test_compare_examples():
    assert surd_compare(Surd(0, 1, 5), Surd(2)) > 0
    assert surd_compare(Surd(Fraction(-1, 2), Fraction(1, 2), 13), Surd(0)) > 0
    assert surd_compare(Surd(Fraction(-1, 2), Fraction(-1, 2), 5), Surd(-1)) < 0


def test_compare_mixed_radicands():
    assert Surd(0, 1, 2) < Surd(0, 1, 3)
    assert Surd(1, 1, 2) > Surd(0, 1, 5)      # 2.414 > 2.236
    assert Surd(0, 5, 2) > Surd(0, 4, 3)      # 7.07 > 6.93
    assert Surd(0, 4, 3) < Surd(0, 5, 2)
    assert Surd(-1, 3, 2) < Surd(0, 2, 3)     # 3.243 < 3.464
    assert Surd(0, 1, 6) == Surd(0, 1, 6)


@given(surds_st, surds_st, surds_st)
@settings(max_examples=300)
def test_compare_total_order(x, y, z):
    cxy = surd_compare(x, y)
    assert surd_compare(y, x) == -cxy
    if cxy == 0:
        assert surd_compare(x, z) == surd_compare(y, z)
    if surd_compare(x, y) <= 0 and surd_compare(y, z) <= 0:
        assert surd_compare(x, z) <= 0


def test_compare_agrees_with_longdouble():
    # exact order must match 80-bit float order whenever floats clearly separate
    rng = random.Random(20240412)
    for _ in range(10_000):
        d1, d2 = rng.choice(RADICANDS), rng.choice(RADICANDS)
        x = Surd(Fraction(rng.randint(-60, 60), rng.randint(1, 9)),
                 Fraction(rng.randint(-60, 60), rng.randint(1, 9)), d1)
        y = Surd(Fraction(rng.randint(-60, 60), rng.randint(1, 9)),
                 Fraction(rng.randint(-60, 60), rng.randint(1, 9)), d2)
        fx = np.longdouble(x.a.numerator) / np.longdouble(x.a.denominator) + \
            np.longdouble(x.b.numerator) / np.longdouble(x.b.denominator) * np.sqrt(np.longdouble(d1))
        fy = np.longdouble(y.a.numerator) / np.longdouble(y.a.denominator) + \
            np.longdouble(y.b.numerator) / np.longdouble(y.b.denominator) * np.sqrt(np.longdouble(d2))
        if abs(fx - fy) > 1e-12:
            assert surd_compare(x, y) == (1 if fx > fy else -1)


def test_abs_examples():
    assert surd_abs(Surd(-3)) == Surd(3)
    assert surd_abs(Surd(Fraction(-1, 2), Fraction(-1, 2), 5)) == Surd(Fraction(1, 2), Fraction(1, 2), 5)
    assert surd_abs(Surd(0)) == Surd(0)


@given(surds_st)
def test_abs_properties(s):
    assert surd_abs(s) >= Surd(0)
    assert surd_abs(-s) == surd_abs(s)


def test_arithmetic_in_one_radicand():
    phi = Surd(Fraction(1, 2), Fraction(1, 2), 5)
    assert phi * phi == phi + 1          # golden ratio identity
    assert (phi - phi) == Surd(0)
    assert phi / phi == Surd(1)
    inv = phi.inverse()
    assert phi * inv == Surd(1)


def test_mixed_radicand_arithmetic_rejected():
    with pytest.raises(ValueError):
        Surd(0, 1, 2) + Surd(0, 1, 3)


def test_exact_sum_conference_terms():
    d = 1
    total = exact_sum([(Surd(2 * d), 1), (Surd(0, d, 4 * d + 1), 1), (Surd(d), 1)])
    assert total == ExactValue([(1, 3), (5, 1)])
    # matches the closed-form conference energy 2d(1 + sqrt(4d+1)) modulo bookkeeping:
    closed = ExactValue([(1, 2 * d), (4 * d + 1, 2 * d)])
    assert closed == ExactValue([(1, 2), (5, 2)])


def test_exact_sum_empty_and_cancellation():
    assert exact_sum([]).is_zero
    assert exact_sum([(Surd(1), 3), (Surd(-1), 3)]).is_zero


def test_exact_value_comparison():
    v = ExactValue([(1, 3), (5, 1)])      # 3 + sqrt(5)
    assert v > 5
    assert v < 6
    assert v.compare(ExactValue([(1, 3), (5, 1)])) == 0
    w = ExactValue([(2, 1), (6, 1)])      # sqrt(2) + sqrt(6) = 3.863
    assert w < 4
    assert w > Fraction(38, 10)
    assert ExactValue([(1, 2), (2, 1)]) > ExactValue([(1, 1), (3, 1)])


def test_exact_value_equality_is_coefficientwise():
    assert ExactValue([(8, 1)]) == ExactValue([(2, 2)])
    assert ExactValue([(2, 1), (3, 1)]) != ExactValue([(5, 1)])


def test_round_trip_rendering():
    cases = [
        Surd(3),
        Surd(Fraction(-1, 2)),
        Surd(0, 2, 3),
        Surd(0, -1, 2),
        Surd(Fraction(-1, 2), Fraction(1, 2), 5),
        Surd(2, -3, 7),
        Surd(0),
    ]
    for s in cases:
        assert parse_surd(str(s)) == s


@given(surds_st)
def test_round_trip_rendering_random(s):
    assert parse_surd(str(s)) == s


def test_rendering_matches_convention():
    assert str(Surd(Fraction(-1, 2), Fraction(1, 2), 5)) == "-1/2 + 1/2*sqrt(5)"
    assert str(Surd(2, -3, 7)) == "2 - 3*sqrt(7)"
    assert str(Surd(0, 1, 3)) == "sqrt(3)"
    assert str(Surd(5)) == "5"
