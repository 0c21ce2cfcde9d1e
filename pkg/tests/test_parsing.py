from fractions import Fraction

import pytest
from hypothesis import given, settings

from k3deg.algebra.poly import MultiPoly
from k3deg.errors import ParseError
from k3deg.parsing import BinOp, Pow, format_poly, parse_expr, parse_poly
from strategies import polys

NAMES = ("x1", "x2", "x3", "y")


def test_fermat_and_product():
    f = parse_poly("x1^6 + x2^6 + x3^6")
    assert len(f.terms) == 3 and f.homogeneous_degree() == 6
    tree = parse_expr("x1^2 * (x2^4 + x3^4)")
    assert isinstance(tree, BinOp) and tree.op == "*" and isinstance(tree.left, Pow)


def test_whitespace_and_rationals():
    assert parse_poly(" 1/4 * x1 ^2 ") == parse_poly("1/4*x1^2")
    assert parse_poly("3/6*x1").terms[(1, 0, 0, 0)] == Fraction(1, 2)


@pytest.mark.parametrize("text,pos,reason", [
    ("x1 x2", 3, "unexpected 'x2'"),
    ("x1^-2", 3, "negative exponent"),
    ("x1^1/2", 3, "fractional exponent"),
    ("x1 + z", 5, "unknown variable 'z'"),
    ("(x1 + x2", 8, "expected ')'"),
    ("", 0, "empty expression"),
    ("x1 + 1/0", 5, "zero denominator"),
    ("x1 ^ x2", 5, "exponent must be"),
])
def test_errors_carry_position(text, pos, reason):
    with pytest.raises(ParseError) as exc:
        parse_poly(text)
    assert exc.value.position == pos
    assert exc.value.reason.startswith(reason)


def test_y_has_weight_two():
    f = parse_poly("y^3 + x1^6")
    assert f.homogeneous_degree() == 6


@settings(max_examples=200)
@given(polys(NAMES, max_deg=4, max_terms=6))
def test_round_trip(f):
    f = MultiPoly(f.terms, NAMES, (1, 1, 1, 2))
    text = format_poly(f)
    assert parse_poly(text) == f
    assert format_poly(parse_poly(text)) == text
