"""Division, gcd, resultants and square-part extraction for MultiPoly."""
from __future__ import annotations

from fractions import Fraction

from ..errors import NotInClassification
from .poly import MultiPoly


def _one(f):
    return MultiPoly.const(1, f.names, f.weights)


def divexact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact quotient ``f / g``; raises ``ArithmeticError`` if inexact."""
    f._same(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_constant():
        return f * (1 / g.constant_value())
    ge = max(g.terms)
    gc = g.terms[ge]
    ginv = 1 / gc
    r = dict(f.terms)
    q = {}
    gterms = list(g.terms.items())
    while r:
        re = max(r)
        d = tuple(a - b for a, b in zip(re, ge))
        if any(a < 0 for a in d):
            raise ArithmeticError("inexact multivariate division")
        c = r[re] * ginv
        q[d] = c
        for e, v in gterms:
            m = tuple(a + b for a, b in zip(e, d))
            w = r.get(m)
            w = -c * v if w is None else w - c * v
            if w:
                r[m] = w
            else:
                r.pop(m, None)
    return f.new(q)


def divides(g: MultiPoly, f: MultiPoly) -> bool:
    try:
        divexact(f, g)
    except ArithmeticError:
        return False
    return True


def _dense(f, i):
    cs = f.coeffs_in(i)
    n = max(cs) if cs else -1
    z = f.new({})
    return [cs.get(k, z) for k in range(n + 1)]


def _undense(coeffs, i, f):
    return MultiPoly.from_coeffs({k: c for k, c in enumerate(coeffs) if c}, i, f.names, f.weights)


def prem(f: MultiPoly, g: MultiPoly, var) -> MultiPoly:
    """Pseudo-remainder ``lc(g)^(deg f - deg g + 1) * f mod g`` in ``var``."""
    i = f.index(var)
    a = _dense(f, i)
    b = _dense(g, i)
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero")
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return f
    steps = len(a) - db
    for _ in range(steps):
        if len(a) - 1 < db:
            a = [c * lb for c in a]
            continue
        la = a[-1]
        k = len(a) - 1 - db
        a = [c * lb for c in a]
        for j in range(db + 1):
            a[k + j] = a[k + j] - la * b[j]
        a.pop()
        while a and not a[-1]:
            a.pop()
    return _undense(a, i, f)


def content(f: MultiPoly, var) -> MultiPoly:
    """Gcd of the coefficients of ``f`` viewed as a polynomial in ``var``."""
    cs = list(f.coeffs_in(var).values())
    cs.sort(key=lambda p: len(p.terms))
    g = cs[0] if cs else f.new({})
    for c in cs[1:]:
        if g.is_constant():
            break
        g = _gcd(g, c)
    return g.normalized() if not g.is_constant() else _one(f)


def primitive_part(f: MultiPoly, var) -> MultiPoly:
    c = content(f, var)
    p = f if c.is_constant() else divexact(f, c)
    return p.normalized()


def _main_var(f, g):
    for i in range(len(f.names)):
        if f.degree(i) > 0 or g.degree(i) > 0:
            return i
    return None


def _gcd(f, g):
    if not f:
        return g.normalized()
    if not g:
        return f.normalized()
    if f.is_constant() or g.is_constant():
        return _one(f)
    v = _main_var(f, g)
    if v is None:
        return _one(f)
    if f.degree(v) == 0:
        return _gcd(f, content(g, v))
    if g.degree(v) == 0:
        return _gcd(content(f, v), g)
    cf, cg = content(f, v), content(g, v)
    c = _gcd(cf, cg)
    a = f if cf.is_constant() else divexact(f, cf)
    b = g if cg.is_constant() else divexact(g, cg)
    a, b = a.normalized(), b.normalized()
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while True:
        r = prem(a, b, v)
        if not r:
            break
        if r.degree(v) == 0:
            b = _one(f)
            break
        a, b = b, primitive_part(r, v)
    return (c * b).normalized()


def gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Normalized gcd.  Over Q the result is integral and primitive with a
    positive graded-lex leading coefficient; over a number field it is monic.
    ``gcd(0, 0) == 0``.
    """
    f._same(g)
    if not f and not g:
        return f
    return _gcd(f, g)


def gcd_list(polys):
    polys = list(polys)
    g = polys[0]
    for p in polys[1:]:
        if g.is_constant() and g:
            break
        g = gcd(g, p)
    return g


def resultant(f: MultiPoly, g: MultiPoly, var) -> MultiPoly:
    """Sylvester resultant of ``f`` and ``g`` in ``var`` (rows of ``f`` first).

    Computed with the subresultant PRS.  The result is free of ``var``.
    """
    f._same(g)
    if not f and not g:
        raise ValueError("resultant of two zero polynomials")
    i = f.index(var)
    if not f or not g:
        return f.new({})
    da, db = f.degree(i), g.degree(i)
    if db == 0:
        return g ** da
    if da == 0:
        return f ** db
    a, b = f, g
    s = 1
    if da < db:
        a, b = b, a
        if da % 2 and db % 2:
            s = -s
    one = _one(f)
    gg = one
    h = one
    while True:
        da, db = a.degree(i), b.degree(i)
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = prem(a, b, i)
        a = b
        if not r:
            return f.new({})
        b = divexact(r, gg * h ** delta)
        gg = _dense(a, i)[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = divexact(gg ** delta, h ** (delta - 1))
        if b.degree(i) == 0:
            break
    da = a.degree(i)
    lb = b
    if da == 1:
        res = lb
    else:
        res = divexact(lb ** da, h ** (da - 1))
    return res * s


def discriminant_like(f: MultiPoly, var) -> MultiPoly:
    return resultant(f, f.diff(var), var)


def squarefree_parts(f: MultiPoly):
    """Return ``(c, [S1, S2, ...])`` with ``f = c * prod Sk**k``.

    Each ``Sk`` is the normalized product of the irreducible factors of
    exact multiplicity ``k``.
    """
    if not f:
        raise ValueError("zero polynomial")
    if f.is_constant():
        return f.constant_value(), []
    names = [i for i in range(len(f.names)) if f.degree(i) > 0]
    chain = [f.normalized()]
    while not chain[-1].is_constant():
        cur = chain[-1]
        chain.append(gcd_list([cur] + [cur.diff(i) for i in names]))
    # chain[k] = prod p^(e-k) over factors with e > k
    p = [divexact(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
    s = []
    for k in range(len(p)):
        nxt = p[k + 1] if k + 1 < len(p) else _one(f)
        s.append(divexact(p[k], nxt).normalized())
    prod = _one(f)
    for k, sk in enumerate(s, start=1):
        prod = prod * sk ** k
    c = divexact(f, prod)
    return c.constant_value(), s


def square_part_decompose(f: MultiPoly):
    """Write ``f = g**2 * h`` with ``g`` maximal; both factors reduced.

    Raises :class:`NotInClassification` when a factor of multiplicity at
    least four would make ``g`` non-reduced.
    """
    _, s = squarefree_parts(f)
    for k, sk in enumerate(s, start=1):
        if k >= 4 and not sk.is_constant():
            raise NotInClassification(
                f"factor {sk} occurs with multiplicity {k} >= 4; g would not be reduced",
                factor=sk, multiplicity=k)
    one = _one(f)
    g = one
    for k, sk in enumerate(s, start=1):
        if k in (2, 3):
            g = g * sk
    g = g.normalized() if not g.is_constant() else one
    h = divexact(f, g * g)
    return g, h


def _squarefree_on_a_line(f: MultiPoly, tries: int = 3) -> bool:
    """Sufficient test: ``f(t v + w)`` squarefree in ``t`` for some line.

    With the top-degree part nonzero at ``v``, every factor of ``f`` stays
    a nonconstant factor of the restriction, so a repeated factor of ``f``
    would show up as a repeated root.
    """
    from . import upoly
    n = len(f.names)
    top = f.homogeneous_part(f.degree())
    t = MultiPoly.var("t", ("t",))
    for k in range(tries):
        v = [Fraction(1 + ((k + 1) * (i + 2)) % 7) for i in range(n)]
        if not top.evaluate(dict(enumerate(v))):
            continue
        w = [Fraction((3 * i + 5 * k + 1) % 11 - 5) for i in range(n)]
        g = f.compose([t * v[i] + w[i] for i in range(n)], ("t",))
        if upoly.is_squarefree(g.to_upoly(0)):
            return True
    return False


def is_squarefree(f: MultiPoly) -> bool:
    if f.is_constant():
        return True
    if _squarefree_on_a_line(f):
        return True
    g = gcd_list([f] + [f.diff(i) for i in range(len(f.names)) if f.degree(i) > 0])
    return g.is_constant()
