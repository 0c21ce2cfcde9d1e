"""Univariate factorization over Q, quadratic-extension factorization by
norms, and certified complex root boxes for display.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import sympy

from . import upoly
from .numberfield import NFElement, NumberField, upoly_str


def factor_rational(coeffs):
    """Factor a dense univariate polynomial over Q.

    Returns ``(unit, [(factor, exponent), ...])`` with monic factors sorted by
    (degree, coefficients).  ``unit * prod(factor**exponent)`` is the input.
    """
    coeffs = upoly.trim([Fraction(c) for c in coeffs])
    if not coeffs:
        raise ValueError("cannot factor the zero polynomial")
    if len(coeffs) == 1:
        return coeffs[0], []
    t = sympy.Symbol("t")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], t, domain="QQ")
    _, facs = expr.factor_list()
    out = []
    for p, e in facs:
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
        out.append((upoly.monic(cs), int(e)))
    out.sort(key=lambda fe: (len(fe[0]), fe[0]))
    return coeffs[-1], out


def _as_bivariate(coeffs, field: NumberField):
    """Lift ``sum c_i X^i`` with ``c_i`` in Q[t]/(p) to a polynomial in (X, t)."""
    from .poly import MultiPoly
    terms = {}
    for i, c in enumerate(coeffs):
        cs = c.coeffs if isinstance(c, NFElement) else ((Fraction(c),) if c else ())
        for j, a in enumerate(cs):
            if a:
                terms[(i, j)] = a
    return MultiPoly(terms, ("X", "t"))


def norm(coeffs, field: NumberField):
    """Norm to Q of a univariate polynomial over ``field``: Res_t(p(t), r(X, t))."""
    from .poly import MultiPoly
    from .polyalg import resultant
    r = _as_bivariate(coeffs, field)
    p = MultiPoly({(0, j): c for j, c in enumerate(field.modulus) if c}, ("X", "t"))
    res = resultant(p, r, "t")
    return res.to_upoly("X") if res else []


def factor_over(coeffs, field):
    """Factor a squarefree univariate polynomial over Q or a number field.

    Returns a list of :class:`FieldFactor`.  Over a number field this is
    Trager's algorithm: shift until the norm is squarefree, factor the norm
    over Q and take gcds.
    """
    coeffs = upoly.trim(coeffs)
    if field is None:
        _, facs = factor_rational(coeffs)
        out = []
        for p, e in facs:
            if e != 1:
                raise ValueError("factor_over expects a squarefree polynomial")
            out.append(FieldFactor(tuple(p), 0, tuple(p), None))
        return out
    gen = field.gen()
    coeffs = [field(c) for c in coeffs]
    for k in range(0, 60):
        shifted = upoly.taylor_shift(coeffs, gen * (-k)) if k else coeffs
        nrm = norm(shifted, field)
        if nrm and upoly.is_squarefree(nrm):
            break
    else:
        raise ArithmeticError("no squarefree norm found")
    _, facs = factor_rational(nrm)
    out = []
    for p, _e in facs:
        g = upoly.gcd(shifted, [field(c) for c in p])
        back = upoly.taylor_shift(g, gen * k) if k else g
        out.append(FieldFactor(tuple(upoly.monic(back)), k, tuple(p), field))
    out.sort(key=lambda f: (len(f.factor), f.norm))
    return out


@dataclass(frozen=True)
class FieldFactor:
    """An irreducible factor over ``base`` (``None`` meaning Q).

    ``norm`` is a Q-irreducible polynomial whose roots ``theta`` give the
    roots ``theta - shift * gen`` of ``factor``.
    """

    factor: tuple
    shift: int
    norm: tuple
    base: object

    @property
    def degree(self) -> int:
        return len(self.factor) - 1


def root_field(ff: FieldFactor):
    """A simple extension holding a root of ``ff.factor``.

    Returns ``(L, embed, root)``: ``L`` is Q[X]/(norm), ``embed`` maps
    elements of the base field into ``L`` and ``root`` is the root in ``L``.
    """
    L = NumberField(list(ff.norm), name="t")
    theta = L.gen()
    if ff.base is None:
        return L, (lambda c: L(c)), theta
    base = ff.base
    # find the image of the base generator: the common root T of p(T) and
    # the shifted factor g(theta + k T) ... solved by a gcd over L
    g = [base(c) for c in ff.factor]
    pT = [L(c) for c in base.modulus]
    # coefficients of q(T) = factor(theta - k*T) as a polynomial in T over L
    qT = _compose_factor(g, base, L, theta, ff.shift)
    lin = upoly.gcd(pT, qT)
    if len(lin) != 2:
        raise ArithmeticError("primitive element reconstruction failed")
    tL = -lin[0]

    def embed(c, tL=tL):
        if isinstance(c, NFElement):
            acc = L.zero()
            for a in reversed(c.coeffs):
                acc = acc * tL + a
            return acc
        return L(c)

    return L, embed, theta - tL * ff.shift


def _compose_factor(g, base, L, theta, k):
    # q(T) = sum_i g_i(T) * (theta - k T)^i, where g_i(T) is g_i with the
    # base generator replaced by the indeterminate T
    lin = [theta, L(-k)] if k else [theta]
    out = []
    powr = [L.one()]
    for i, c in enumerate(g):
        ci = [L(a) for a in c.coeffs]
        out = upoly.add(out, upoly.mul(ci, powr))
        powr = upoly.mul(powr, lin)
    pT = [L(c) for c in base.modulus]
    return upoly.rem(out, pT) if len(out) >= len(pT) else out


@dataclass(frozen=True)
class AlgebraicNumber:
    """A root of an irreducible monic ``minpoly`` isolated by a rational box.

    The box is ``[re_lo, re_hi] x [im_lo, im_hi]``.  Isolation is certified
    by Weierstrass inclusion discs computed in exact rational arithmetic.
    """

    minpoly: tuple
    box: tuple

    def approx(self, digits: int = 12) -> str:
        re = (self.box[0] + self.box[1]) / 2
        im = (self.box[2] + self.box[3]) / 2
        rs = mpmath.nstr(mpmath.mpf(re.numerator) / re.denominator, digits)
        if im == 0 and self.box[2] <= 0 <= self.box[3] and _is_real_root(self):
            return rs
        ims = mpmath.nstr(mpmath.mpf(im.numerator) / im.denominator, digits)
        return f"{rs}{'+' if im >= 0 else '-'}{ims.lstrip('-')}i"

    def __str__(self):
        return f"root of {upoly_str(self.minpoly)} near {self.approx()}"


def _is_real_root(a: AlgebraicNumber) -> bool:
    p = list(a.minpoly)
    lo, hi = a.box[0], a.box[1]
    return upoly.evaluate(p, lo) * upoly.evaluate(p, hi) <= 0


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cabs2(a):
    return a[0] * a[0] + a[1] * a[1]


def _ceval(p, z):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(p):
        acc = _cmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


def isolate_roots(coeffs, digits: int = 40):
    """Certified isolating boxes for every root of a squarefree ``coeffs``."""
    p = upoly.monic([Fraction(c) for c in coeffs])
    n = len(p) - 1
    if n < 1:
        return []
    mpmath.mp.dps = digits
    approx = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(p)],
                              maxsteps=200, extraprec=4 * digits)
    zs = []
    for r in approx:
        r = mpmath.mpc(r)
        zs.append((Fraction(str(mpmath.nstr(r.real, digits))), Fraction(str(mpmath.nstr(r.imag, digits)))))
    # Weierstrass corrections: the disc |z - zi| <= n|Wi| contains a root and
    # disjoint discs contain exactly one each
    rad2 = []
    for i, zi in enumerate(zs):
        num = _ceval(p, zi)
        den = (Fraction(1), Fraction(0))
        for j, zj in enumerate(zs):
            if i != j:
                den = _cmul(den, (zi[0] - zj[0], zi[1] - zj[1]))
        d2 = _cabs2(den)
        if d2 == 0:
            raise ArithmeticError("coincident root approximations")
        rad2.append(Fraction(n * n) * _cabs2(num) / d2)
    out = []
    for i, zi in enumerate(zs):
        for j in range(i + 1, len(zs)):
            zj = zs[j]
            dist2 = _cabs2((zi[0] - zj[0], zi[1] - zj[1]))
            # need sqrt(ri)+sqrt(rj) < dist, checked as 4*ri*rj < (dist2-ri-rj)^2
            s = dist2 - rad2[i] - rad2[j]
            if s <= 0 or 4 * rad2[i] * rad2[j] >= s * s:
                raise ArithmeticError("root discs overlap; raise precision")
        r = _upper_sqrt(rad2[i])
        out.append(AlgebraicNumber(tuple(p), (zi[0] - r, zi[0] + r, zi[1] - r, zi[1] + r)))
    out.sort(key=lambda a: (a.box[0] + a.box[1], a.box[2] + a.box[3]))
    return out


def _upper_sqrt(x: Fraction) -> Fraction:
    if x == 0:
        return Fraction(0)
    s = Fraction(mpmath.nstr(mpmath.sqrt(mpmath.mpf(x.numerator) / x.denominator), 20))
    while s * s < x:
        s *= Fraction(11, 10)
    return s * 2 if s > 0 else Fraction(1, 10**30)
