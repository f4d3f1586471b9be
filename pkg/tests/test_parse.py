from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import P, XYZ, polys
from rank2lnd.errors import ParseError
from rank2lnd.parse import parse_polynomial
from rank2lnd.poly import Polynomial


def test_precedence_and_signs():
    X, Y, Z = Polynomial.gens(XYZ)
    assert P("-X^2") == -(X ** 2)
    assert P("2*X + 3*Y*Z") == X * 2 + Y * Z * 3
    assert P("(X+Y)^2 - -Z") == (X + Y) ** 2 + Z
    assert P("  Y ^ 2\n+ X * Z ") == Y ** 2 + X * Z


def test_rational_literals():
    assert P("3/6*X").coefficient((1, 0, 0)) == Fraction(1, 2)
    assert P("-1/2").constant_value() == Fraction(-1, 2)


@pytest.mark.parametrize("text, column", [
    ("Y^", 3),
    ("2X", 2),
    ("X Y", 3),
    ("X^Y", 3),
    ("X^2^3", 4),
    ("W + 1", 1),
    ("(X + Y", 7),
    ("X + $", 5),
    ("1/0", 3),
])
def test_errors_report_position(text, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, XYZ)
    assert info.value.column == column
    assert info.value.line == 1


def test_error_line_number():
    with pytest.raises(ParseError) as info:
        parse_polynomial("X +\n  Y^", XYZ)
    assert (info.value.line, info.value.column) == (2, 5)


def test_juxtaposition_message():
    with pytest.raises(ParseError, match="juxtaposition"):
        parse_polynomial("2X", XYZ)


@given(polys())
@settings(max_examples=80, deadline=None)
def test_print_parse_round_trip(f):
    assert parse_polynomial(str(f), XYZ) == f
