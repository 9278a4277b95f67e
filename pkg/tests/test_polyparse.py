import random
from fractions import Fraction

import pytest

from orbitflex.exactpoly import MultiPoly, NonHomogeneousError
from orbitflex.exactpoly.unipoly import ZeroPolynomialError
from orbitflex.polyparse import (
    ParseError,
    UnknownVariableError,
    parse_expression,
    parse_form,
)
from helpers import CURVE_VARS, random_homogeneous, random_multipoly

V = CURVE_VARS
X = MultiPoly.var(V, "x")
Y = MultiPoly.var(V, "y")
Z = MultiPoly.var(V, "z")


def test_fermat_cubic():
    poly, d = parse_form("x^3 + y^3 + z^3")
    assert poly == X**3 + Y**3 + Z**3
    assert d == 3


def test_klein_quartic_explicit_multiplication():
    poly, d = parse_form("x^3*y + y^3*z + z^3*x")
    assert poly == X**3 * Y + Y**3 * Z + Z**3 * X
    assert d == 4


def test_klein_quartic_juxtaposition():
    poly, d = parse_form("x^3y + y^3z + z^3x")
    assert poly == X**3 * Y + Y**3 * Z + Z**3 * X
    assert d == 4


def test_non_homogeneous_rejected():
    with pytest.raises(NonHomogeneousError):
        parse_form("x^2 + y^3")


def test_whitespace_insensitive():
    a, _ = parse_form(" x ^ 3 + y^3 +\tz^3 ")
    b, _ = parse_form("x^3+y^3+z^3")
    assert a == b


def test_rational_coefficients():
    poly = parse_expression("1/2x^2 + 3/4y^2")
    assert poly.coefficient((2, 0, 0)) == Fraction(1, 2)
    assert poly.coefficient((0, 2, 0)) == Fraction(3, 4)


def test_integer_coefficient_juxtaposition():
    assert parse_expression("2x") == 2 * X
    assert parse_expression("3(x+y)z^2") == 3 * (X + Y) * Z**2


def test_unary_minus_binds_below_power():
    assert parse_expression("-x^2") == -(X**2)
    assert parse_expression("-x^2 + x^2").is_zero()
    assert parse_expression("x^3 - -y^3") == X**3 + Y**3


def test_binary_minus_not_swallowed_by_juxtaposition():
    assert parse_expression("x - y") == X - Y
    assert parse_expression("x*-y") == -(X * Y)


def test_parenthesized_powers():
    assert parse_expression("(x+y)^2") == (X + Y) ** 2


def test_unknown_variable_with_position():
    with pytest.raises(UnknownVariableError) as err:
        parse_form("x^3 + w^3")
    assert err.value.position == 6


def test_syntax_errors_carry_position():
    for text, pos in [("x^^3", 2), ("x^3 + ", 6), ("(x+y", 4), ("x/y", 1)]:
        with pytest.raises(ParseError) as err:
            parse_expression(text)
        assert err.value.position == pos


def test_empty_expression_rejected():
    with pytest.raises(ParseError):
        parse_form("   ")


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_expression("1/0x^3")


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomialError):
        parse_form("x^3 - x^3")


def test_exponent_must_be_literal():
    with pytest.raises(ParseError):
        parse_expression("x^-2")


def test_roundtrip_with_canonical_printer():
    rng = random.Random(43)
    for _ in range(40):
        p = random_multipoly(rng, max_degree=4, max_terms=6, coeff_range=9)
        assert parse_expression(str(p)) == p
    for _ in range(10):
        p = random_homogeneous(rng, rng.randint(1, 4))
        assert parse_expression(str(p)) == p


def test_roundtrip_with_fraction_coefficients():
    p = MultiPoly(V, {(2, 1, 0): Fraction(7, 3), (0, 0, 3): Fraction(-1, 2)})
    assert parse_expression(str(p)) == p


def test_reported_degree_matches_common_degree():
    _, d = parse_form("x^5*y + 2y^6 - z^6")
    assert d == 6
