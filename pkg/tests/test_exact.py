import json
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pullback_lvalues.exact import (
    PiExponentMismatch,
    PiMonomial,
    format_rational,
    parse_rational,
    pim_add,
    pim_mul,
    rational_arith,
)

fractions = st.fractions(max_denominator=10**6)
nonzero = fractions.filter(bool)
exps = st.integers(-40, 40)


def test_rational_arith_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rational_arith(Fraction(-3694, 3), Fraction(1), "mul") == Fraction(-3694, 3)
    with pytest.raises(ZeroDivisionError):
        rational_arith(1, 0, "div")
    with pytest.raises(ValueError):
        rational_arith(1, 2, "pow")


@given(fractions, fractions)
def test_rational_field_laws(a, b):
    assert rational_arith(a, b, "add") == rational_arith(b, a, "add")
    assert rational_arith(rational_arith(a, b, "sub"), b, "add") == a
    if b:
        assert rational_arith(rational_arith(a, b, "div"), b, "mul") == a


@given(fractions)
def test_format_parse_round_trip(x):
    s = format_rational(x)
    assert parse_rational(s) == x
    assert ("/" in s) == (x.denominator != 1)


def test_format_canonical():
    assert format_rational(Fraction(4, -6)) == "-2/3"
    assert format_rational(Fraction(10, 5)) == "2"


def test_pi_monomial_examples():
    z2 = PiMonomial(Fraction(1, 6), 2)
    assert z2 * PiMonomial(Fraction(1, 6), 2) == PiMonomial(Fraction(1, 36), 4)
    assert z2 / PiMonomial(1, 1) == PiMonomial(Fraction(1, 6), 1)
    with pytest.raises(PiExponentMismatch):
        PiMonomial(1, 2) + PiMonomial(1, 3)
    assert math.isclose(float(z2), math.pi**2 / 6, rel_tol=1e-15)


def test_zero_monomial_is_exponent_free():
    assert PiMonomial(0, 7) == PiMonomial(0)
    assert PiMonomial(0) + PiMonomial(3, 5) == PiMonomial(3, 5)
    assert PiMonomial(2, 1) - PiMonomial(2, 1) == PiMonomial(0)


def test_negative_exponent_rejected_on_export():
    with pytest.raises(ValueError):
        PiMonomial(1, -1).require_nonnegative()
    assert PiMonomial(1, 0).require_nonnegative() == PiMonomial(1)


@given(nonzero, exps, nonzero, exps, nonzero, exps)
def test_multiplication_associative_commutative(a, e, b, f, c, g):
    x, y, z = PiMonomial(a, e), PiMonomial(b, f), PiMonomial(c, g)
    assert pim_mul(x, y) == pim_mul(y, x)
    assert pim_mul(pim_mul(x, y), z) == pim_mul(x, pim_mul(y, z))
    assert (x * y) / y == x


@given(fractions, fractions, exps)
def test_addition_same_exponent(a, b, e):
    assert pim_add(PiMonomial(a, e), PiMonomial(b, e)) == PiMonomial(a + b, e)


@given(fractions, exps)
def test_json_round_trip(a, e):
    x = PiMonomial(a, e)
    assert PiMonomial.from_json(json.loads(json.dumps(x.to_json()))) == x


@given(nonzero, st.integers(0, 60))
def test_float_matches_direct_evaluation(a, e):
    assert math.isclose(float(PiMonomial(a, e)), float(a) * math.pi**e, rel_tol=1e-12)


def test_float_survives_huge_pi_power():
    # pi^63 times a tiny rational
    x = PiMonomial(Fraction(1, 10**40), 63)
    assert math.isclose(float(x), math.pi**63 / 1e40, rel_tol=1e-12)
