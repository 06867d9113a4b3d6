"""Parser grammar conformance and error reporting."""

import pytest

from resint import ParseError, Ring, UnknownVariableError, parse_poly
from resint.parser import NegativeExponentError

R = Ring(["x", "y"])


def test_basic_expression():
    p = parse_poly("x^2*y - 3*y + 1", R)
    assert len(p.terms) == 3
    assert {sum(m) for m, _ in p.terms} == {3, 1, 0}


def test_zero_literal():
    assert parse_poly("0", R).terms == ()


def test_unary_minus_at_head():
    assert parse_poly("-x + y", R) == parse_poly("y - x", R)
    assert parse_poly("-(x - y)", R) == parse_poly("y - x", R)


def test_whitespace_insignificant():
    assert parse_poly(" x ^ 2 * y ", R) == parse_poly("x^2*y", R)


def test_parentheses():
    assert parse_poly("(x + 1)*(x - 1)", R) == parse_poly("x^2 - 1", R)


def test_unknown_variable_names_offender():
    with pytest.raises(UnknownVariableError) as exc:
        parse_poly("x + w", R)
    assert "w" in str(exc.value)


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_poly("x + * y", R)
    assert exc.value.position == 4


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_poly("x + y )", R)


def test_negative_exponent_rejected():
    with pytest.raises(NegativeExponentError):
        parse_poly("x^-2", R)


def test_missing_operand():
    with pytest.raises(ParseError):
        parse_poly("x *", R)


def test_fraction_coefficients_roundtrip():
    # printer-compatibility extension: INT/INT in coefficient position
    p = parse_poly("1/2*x + 3", R)
    assert parse_poly(str(p), R) == p


def test_repeated_products_and_powers():
    p = parse_poly("2*x*x*y^2", R)
    assert p == parse_poly("2*x^2*y^2", R)


def test_fixed_point_of_print_parse():
    sources = ["x^2*y - 3*y + 1", "0", "-x", "x*y - x*y", "7 - x^3"]
    for src in sources:
        once = parse_poly(src, R)
        assert parse_poly(str(once), R) == once
