from fractions import Fraction

import pytest

from p3dist.errors import ParseError
from p3dist.grammar import format_poly, parse_poly
from p3dist.poly import ONE, X0, X1, X2, X3, Poly

from conftest import make_rng, random_nonzero_poly


def test_aliases():
    assert parse_poly("x") == parse_poly("x0") == X0
    assert parse_poly("y") == X1
    assert parse_poly("z") == X2
    assert parse_poly("w") == X3


def test_implicit_multiplication():
    assert parse_poly("2x^3y") == 2 * X0 ** 3 * X1
    assert parse_poly("x0x1") == X0 * X1
    assert parse_poly("3(x+y)z") == 3 * (X0 + X1) * X2


def test_rational_coefficients_and_signs():
    assert parse_poly("1/2x - 3/4y") == Fraction(1, 2) * X0 - Fraction(3, 4) * X1
    assert parse_poly("2y^4 + -3xy^2z") == 2 * X1 ** 4 - 3 * X0 * X1 ** 2 * X2
    assert parse_poly("--x") == X0
    assert parse_poly("- + - x") == X0


def test_parentheses_and_powers():
    assert parse_poly("(x+y)^2") == X0 ** 2 + 2 * X0 * X1 + X1 ** 2
    assert parse_poly("((x))") == X0
    assert parse_poly("5") == Poly.constant(5)


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_poly("x0 + * x1")
    assert exc.value.line == 1
    assert exc.value.col == 6

    with pytest.raises(ParseError) as exc:
        parse_poly("x +\n y^")
    assert exc.value.line == 2

    with pytest.raises(ParseError):
        parse_poly("")
    with pytest.raises(ParseError):
        parse_poly("a + b")
    with pytest.raises(ParseError):
        parse_poly("(x")


def test_format_canonical():
    p = 3 * X1 - X0 ** 2 + X3
    assert format_poly(p) == "-x0^2 + 3*x1 + x3"
    assert format_poly(Poly.zero()) == "0"
    assert format_poly(ONE) == "1"


def test_roundtrip_random():
    rng = make_rng(7)
    for _ in range(150):
        p = random_nonzero_poly(rng, rng.randint(0, 4), nterms=6)
        assert parse_poly(format_poly(p)) == p
