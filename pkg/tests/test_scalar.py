"""Tests for exact polynomial and rational-function arithmetic."""

from fractions import Fraction

import pytest

from ybhomology.errors import ParseError, PoleError, ScalarDivisionError
from ybhomology.scalar import (
    ONE,
    Y,
    Y2,
    ZERO,
    IntPoly,
    RatFunc,
    format_poly,
    format_ratfunc,
    parse_ratfunc,
    quantum_factorial,
    quantum_int,
    ratfunc_arith,
    to_sympy_poly,
)


def test_add_cancels_to_zero():
    """(1 - y^2) + y^2 - 1 is the zero function."""
    a = parse_ratfunc("1 - y^2")
    assert ratfunc_arith(ratfunc_arith(a, Y2, "add"), ONE, "sub") == ZERO


def test_division_reduces():
    """(1 - y^4)/(1 - y^2) = 1 + y^2."""
    result = ratfunc_arith(parse_ratfunc("1 - y^4"), parse_ratfunc("1 - y^2"), "div")
    assert result == quantum_int(2)
    assert result.is_poly()


def test_division_by_zero():
    with pytest.raises(ScalarDivisionError):
        ratfunc_arith(ONE, ZERO, "div")


def test_denominator_is_monic():
    r = parse_ratfunc("1/(2 - 2y)")
    assert r.den.lead == 1
    assert r == RatFunc(IntPoly((Fraction(-1, 2),)), IntPoly((-1, 1)))


def test_gcd_of_products():
    a = IntPoly((1, 1)) * IntPoly((1, 0, 1))
    b = IntPoly((1, 1)) * IntPoly((2, -1))
    assert a.gcd(b) == IntPoly((1, 1))


def test_multiplication_matches_sympy():
    a, b = IntPoly((3, -1, 0, 2)), IntPoly((1, 4, -5))
    assert to_sympy_poly(a * b) == to_sympy_poly(a) * to_sympy_poly(b)


def test_primitive_and_content():
    p = IntPoly((Fraction(-1, 2), 0, Fraction(-3, 4)))
    assert p.primitive() == IntPoly((2, 0, 3))
    assert p.content() == Fraction(1, 4)
    assert IntPoly((Fraction(2, 3), Fraction(4, 3))).gcd(IntPoly((-1, -2))) == IntPoly((1, 2))


def test_exact_division_failure():
    q, r = IntPoly((1, 0, 1)).divmod(IntPoly((1, 1)))
    assert q == IntPoly((-1, 1)) and r == IntPoly((2,))
    with pytest.raises(ArithmeticError):
        IntPoly((1, 0, 1)).exact_div(IntPoly((1, 1)))


def test_quantum_integers():
    assert quantum_int(0) == ZERO
    assert quantum_int(1) == ONE
    assert quantum_int(3) == parse_ratfunc("1 + y^2 + y^4")
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)


def test_eval_at_pole():
    r = ONE / parse_ratfunc("1 - y")
    assert r.eval_at(2) == -1
    with pytest.raises(PoleError):
        r.eval_at(1)


def test_format_ascending():
    assert format_poly(IntPoly((1, 0, -1))) == "1 - y^2"
    assert format_poly(IntPoly((0, 0, 0, 0, Fraction(3, 2)))) == "3/2*y^4"
    assert format_ratfunc(ONE / (ONE - Y)) == "(-1)/(-1 + y)"


@pytest.mark.parametrize("text", ["1 - y^2", "y^2", "(1 + y^2)/(1 - y)", "3/2*y^4 - 7"])
def test_parse_format_agree(text):
    value = parse_ratfunc(text)
    assert parse_ratfunc(format_ratfunc(value)) == value


def test_parse_juxtaposition_and_negative_power():
    assert parse_ratfunc("2y") == Y * 2
    assert parse_ratfunc("(1+y)(1-y)") == ONE - Y2
    assert parse_ratfunc("y^-2") * Y2 == ONE


@pytest.mark.parametrize("text", ["1 +", "y^1.5", "2 $ y", "1/0", "y^100000000"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ratfunc(text)
