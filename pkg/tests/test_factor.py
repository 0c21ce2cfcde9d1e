from fractions import Fraction

import sympy as sp
from hypothesis import given, strategies as st

from k3deg.algebra import upoly
from k3deg.algebra.factor import factor_over, factor_rational, isolate_roots, root_field
from k3deg.algebra.numberfield import NumberField
from oracles import kronecker_irreducible

F = Fraction
t = sp.Symbol("t")


def _int_coeffs(p):
    den = 1
    for c in p:
        den = den * c.denominator // __import__("math").gcd(den, c.denominator)
    return [int(c * den) for c in p]


def test_examples():
    assert factor_rational([-1, 0, 1]) == (1, [([F(-1), F(1)], 1), ([F(1), F(1)], 1)])
    assert factor_rational([1, 0, 1]) == (1, [([F(1), F(0), F(1)], 1)])
    _, facs = factor_rational([-1, 0, 0, 0, 0, 0, 1])
    assert sorted(tuple(f) for f, _ in facs) == sorted([(F(-1), F(1)), (F(1), F(1)), (F(1), F(1), F(1)), (F(1), F(-1), F(1))])


@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=4), min_size=1, max_size=3))
def test_factors_reconstruct_and_are_irreducible(parts):
    p = [F(1)]
    for q in parts:
        p = upoly.mul(p, [F(c) for c in q])
    p = upoly.trim(p)
    if upoly.deg(p) < 1:
        return
    unit, facs = factor_rational(p)
    acc = [unit]
    for f, k in facs:
        acc = upoly.mul(acc, upoly.power(f, k))
        if upoly.deg(f) <= 6:
            assert kronecker_irreducible(_int_coeffs(f))
    assert acc == p


def test_factor_over_gaussian():
    K = NumberField((1, 0, 1))
    # t^4 + 1 splits into two quadratics over Q(i)
    facs = factor_over([F(1), 0, 0, 0, F(1)], K)
    assert sorted(ff.degree for ff in facs) == [2, 2]
    theirs = sp.factor_list(t ** 4 + 1, extension=sp.I)[1]
    assert sorted(sp.degree(f, t) for f, _ in theirs) == [2, 2]
    # x^2 + 1 splits into linear factors
    assert [ff.degree for ff in factor_over([F(1), 0, F(1)], K)] == [1, 1]


def test_factor_over_rational_base():
    facs = factor_over([F(-2), 0, F(1)], None)
    assert [ff.degree for ff in facs] == [2]


def test_root_field_contains_root():
    ff = factor_over([F(-2), 0, 0, F(1)], None)[0]
    L, embed, r = root_field(ff)
    assert r ** 3 == L(2)
    K = NumberField((1, 0, 1))
    ff = factor_over([F(1), 0, 0, 0, F(1)], K)[0]
    L, embed, r = root_field(ff)
    i = embed(K.gen())
    assert i * i == L(-1)
    # r is a root of the chosen factor read in L
    val = L(0)
    for k, c in enumerate(ff.factor):
        val = val + embed(c) * r ** k
    assert not val


def test_isolate_roots():
    roots = isolate_roots([F(-2), 0, F(1)])
    assert len(roots) == 2
    approx = sorted(float(sp.N(sp.sympify(r.approx(10)).as_real_imag()[0])) for r in roots)
    assert abs(approx[0] + 2 ** 0.5) < 1e-8 and abs(approx[1] - 2 ** 0.5) < 1e-8
