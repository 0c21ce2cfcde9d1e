from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from k3deg.algebra.poly import MultiPoly, VariableMismatch
from k3deg.algebra.polyalg import (divexact, divides, gcd, is_squarefree, resultant,
                                   square_part_decompose)
from k3deg.errors import NotInClassification
from k3deg.parsing import parse_poly
from oracles import sylvester_resultant
from strategies import forms, polys

XY = ("x", "y")


def P(text, names=("x1", "x2", "x3", "y")):
    return parse_poly(text, names)


def Q(text):
    return parse_poly(text, ("x", "y", "a", "b"))


def to_sym(p):
    syms = sp.symbols(p.names)
    return sum(sp.Rational(c.numerator, c.denominator) * sp.Mul(*[s ** k for s, k in zip(syms, e)])
               for e, c in p.terms.items())


def test_arith_examples():
    x, y = MultiPoly.gens(XY)
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    f = x ** 3 + y
    assert f + MultiPoly.zero(XY) == f
    a = P("x1^3 + x2^3")
    assert a * a == P("x1^6 + 2*x1^3*x2^3 + x2^6")


def test_ring_mismatch():
    with pytest.raises(VariableMismatch):
        MultiPoly.var("x", XY) + MultiPoly.var("x", ("x", "z"))


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f - f == MultiPoly.zero(XY)


@given(polys(), polys())
def test_product_rule(f, g):
    assert (f * g).diff(0) == f.diff(0) * g + f * g.diff(0)


@given(forms(("x1", "x2", "x3"), 2), forms(("x1", "x2", "x3"), 3))
def test_weighted_degree_adds(f, g):
    if f and g:
        assert (f * g).homogeneous_degree() == 5


def test_resultant_examples():
    assert resultant(Q("y - a"), Q("y - b"), "y") == Q("a - b")
    assert resultant(Q("y^2 - x^3"), Q("2*y"), "y") == Q("-4*x^3")
    assert resultant(Q("y^2 - x^3"), Q("1"), "y") == Q("1")


@given(polys(("x", "y"), 3, 4), polys(("x", "y"), 3, 4))
def test_resultant_vs_sylvester(f, g):
    if f.degree("y") < 1 or g.degree("y") < 1:
        return
    x, yv = sp.symbols("x y")
    fs, gs = to_sym(f), to_sym(g)
    ca = [sp.expand(fs).coeff(yv, k) for k in range(f.degree("y") + 1)]
    cb = [sp.expand(gs).coeff(yv, k) for k in range(g.degree("y") + 1)]
    assert sp.expand(to_sym(resultant(f, g, "y")) - sylvester_resultant(ca, cb)) == 0


def test_gcd_examples():
    assert gcd(Q("x^2 - y^2"), Q("x - y")) == Q("x - y")
    f = Q("2*x^2*y + 4*x")
    assert gcd(f, f) == Q("x^2*y + 2*x")
    assert gcd(P("x2^4 + x3^4"), P("4*x2^3")).is_constant()
    assert gcd(MultiPoly.zero(XY), MultiPoly.zero(XY)) == MultiPoly.zero(XY)


@given(polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3))
def test_gcd_properties(a, b, c):
    f, g = a * c, b * c
    d = gcd(f, g)
    if not f and not g:
        return
    assert divides(d, f) and divides(d, g)
    if c:
        assert divides(c, d)
    assert to_sym(d).equals(0) or sp.simplify(sp.gcd(to_sym(f), to_sym(g)) / to_sym(d)).is_number


def test_square_part_examples():
    g, h = square_part_decompose(P("x1^6 + x2^6 + x3^6"))
    assert g.is_constant() and h == P("x1^6 + x2^6 + x3^6")
    g, h = square_part_decompose(P("(x1^3 + x2^3 + x3^3)^2"))
    assert g == P("x1^3 + x2^3 + x3^3") and h.is_constant()
    g, h = square_part_decompose(P("x1^3*x2^3"))
    assert g == P("x1*x2") and h == P("x1*x2")


def test_square_part_rejects_fourth_powers():
    with pytest.raises(NotInClassification) as exc:
        square_part_decompose(P("x1^4*x2^2"))
    assert exc.value.data["multiplicity"] == 4
    assert exc.value.data["factor"] == P("x1")


squarefree_pieces = st.sampled_from([
    "x1", "x2 + x3", "x1 - 2*x3", "x1^2 + x2^2 + x3^2", "x2^2 - x1*x3", "x1*x2 + x3^2",
    "x1^3 + x2^3 + x3^3", "x1^3 + x2^3 - x1*x2*x3",
])


def random_product(pieces, hform):
    """g from distinct squarefree pieces (degree at most 3), h of the complementary degree."""
    g = P("*".join(f"({p})" for p in pieces), ("x1", "x2", "x3"))
    dg = g.homogeneous_degree()
    if dg > 3:
        return None
    h = hform(6 - 2 * dg)
    hs, gs = to_sym(h), to_sym(g)
    if h.is_constant():
        return (g, h) if h else None
    if sp.degree(sp.gcd(hs, gs), sp.Symbol("x1")) or sp.sqf_part(hs) != sp.expand(hs / sp.LC(sp.Poly(hs)) * sp.LC(sp.Poly(sp.sqf_part(hs)))):
        return None
    return g, h


@st.composite
def products(draw):
    pieces = draw(st.lists(squarefree_pieces, min_size=1, max_size=3, unique=True))

    def hform(d):
        if d == 0:
            return P(str(draw(st.integers(1, 7))), ("x1", "x2", "x3"))
        return draw(forms(("x1", "x2", "x3"), d, max_terms=8))
    return random_product(pieces, hform)


@given(products())
def test_square_part_recovers_g(pair):
    if pair is None:
        return
    g, h = pair
    f = g * g * h
    g2, h2 = square_part_decompose(f)
    assert divexact(g2, g).is_constant()
    assert g2 * g2 * h2 == f
    assert is_squarefree(g2) and (h2.is_constant() or is_squarefree(h2))


@settings(max_examples=80)
@given(polys(("x1", "x2", "x3"), max_deg=3, max_terms=4), polys(("x1", "x2", "x3"), max_deg=2, max_terms=3),
       st.booleans())
def test_is_squarefree_matches_sympy(a, b, square):
    f = a * b * b if square else a * b
    if not f or f.is_constant():
        return
    e = to_sym(f)
    syms = sp.symbols(f.names)
    expected = sp.Poly(sp.sqf_part(e), *syms).total_degree() == sp.Poly(e, *syms).total_degree()
    assert is_squarefree(f) == expected
