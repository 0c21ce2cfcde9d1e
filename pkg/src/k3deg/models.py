"""Ambient models for degree-two fibres and their branch-curve geometry.

Two shapes of input are supported: a sextic ``z^2 = f6(x1, x2, x3)`` in
P(1,1,1,3), and the complete intersection ``z^2 = f6(x, y), f2(x) = 0`` in
P(1,1,1,2,3).  This module validates them, locates singular points of
branch curves chart by chart, analyses the conic ``f2`` and reduces the
unigonal case to a branch curve on P(1,1,4).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import isqrt

from .algebra import upoly
from .algebra.factor import FieldFactor, factor_over, root_field
from .algebra.numberfield import NFElement, NumberField
from .algebra.poly import MultiPoly
from .algebra.polyalg import gcd_list, is_squarefree, resultant, square_part_decompose
from .errors import InvalidModel, NotInClassification
from .germs import GermReport, classify_germ
from .parsing import FIBRE_VARS, FIBRE_WEIGHTS

HYPERELLIPTIC = "hyperelliptic"
UNIGONAL = "unigonal"

PLANE_VARS = ("x1", "x2", "x3")
P114_VARS = ("u", "v", "y")
P114_WEIGHTS = (1, 1, 4)
P112_VARS = ("s", "w", "y")
P112_WEIGHTS = (1, 1, 2)


@dataclass(frozen=True)
class FiberModel:
    kind: str
    f6: MultiPoly
    f2: MultiPoly | None = None
    parametrization: tuple | None = None  # optional (q1, q2, q3) in (u, v)


def _in_fibre_ring(p: MultiPoly) -> MultiPoly:
    if p.names == FIBRE_VARS:
        return MultiPoly(p.terms, FIBRE_VARS, FIBRE_WEIGHTS)
    return p.embed(FIBRE_VARS, FIBRE_WEIGHTS)


def validate(model: FiberModel) -> list[str]:
    """Every violated condition, as a list of messages (empty when valid)."""
    errs = []
    f6 = _in_fibre_ring(model.f6)
    if not f6:
        errs.append("f6 is zero")
    elif f6.homogeneous_degree() != 6:
        errs.append("f6 is not weighted-homogeneous of degree 6")
    if model.kind == HYPERELLIPTIC:
        if f6 and f6.degree("y") > 0:
            errs.append("hyperelliptic f6 must not involve y")
        if model.f2 is not None:
            errs.append("hyperelliptic model takes no f2")
    elif model.kind == UNIGONAL:
        if model.f2 is None or not model.f2:
            errs.append("f2 is zero or missing")
        else:
            f2 = _in_fibre_ring(model.f2)
            if f2.degree("y") > 0 or f2.homogeneous_degree() != 2:
                errs.append("f2 is not a quadratic form in x1, x2, x3")
            elif gram_rank(f2) == 1:
                errs.append("f2 has rank 1 (a double line)")
        if f6 and not f6.evaluate({"x1": 0, "x2": 0, "x3": 0, "y": 1}):
            errs.append("f6(0,0,0,1) = 0")
    else:
        errs.append(f"unknown model kind {model.kind!r}")
    return errs


def ensure_valid(model: FiberModel):
    errs = validate(model)
    if errs:
        raise InvalidModel(errs)


# singular loci


@dataclass(frozen=True)
class PointOrbit:
    """A Galois orbit of points in an affine chart.

    ``field`` is the residue field of one representative (``None`` for a
    rational point) and ``point`` its chart coordinates; ``size`` is the
    number of conjugate points over the base field.
    """

    chart: str
    coords: tuple
    field: NumberField | None
    point: tuple
    size: int
    local: tuple = dc_field(default=(), compare=False, repr=False)
    fixed: int = 0  # index of the homogeneous coordinate set to 1

    def describe(self):
        d = {
            "chart": self.chart,
            "coords": list(self.coords),
            "point": [str(c) for c in self.point],
            "size": self.size,
        }
        if self.field is not None:
            d["field"] = str(self.field).replace("NumberField(", "Q[t]/(")
        return d


@dataclass(frozen=True)
class SingularOrbit:
    orbit: PointOrbit
    report: GermReport

    def to_dict(self):
        d = self.orbit.describe()
        d.update(self.report.to_dict())
        return d


def _embed_poly(p: MultiPoly, emb) -> MultiPoly:
    return p.map_coeffs(emb)


def _sequence():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _lc_constant(p: MultiPoly, i: int) -> bool:
    cs = p.coeffs_in(i)
    return bool(cs) and cs[max(cs)].is_constant()


def affine_common_zeros(polys, limit: int = 40):
    """Common zeros of bivariate polynomials, grouped into Galois orbits.

    ``polys[0]`` must be nonzero.  Returns ``(field, field_factor, (a, b))``
    triples, one per orbit, with coordinates in ``field`` (``None`` = Q).
    """
    polys = [p for p in polys if p] or list(polys[:1])
    main = polys[0]
    base = None
    for p in polys:
        base = base or p.coefficient_field()
    if main.is_constant():
        return [] if main else None
    rest = polys[1:]
    a, b = MultiPoly.gens(main.names, main.weights)
    for c in _sequence():
        if c > limit:
            raise ArithmeticError("could not separate common zeros by shearing")
        if c:
            img = [a + b * c, b]
            sh = [p.compose(img) for p in polys]
        else:
            sh = list(polys)
        m = sh[0]
        if m.degree(1) <= 0 or not _lc_constant(m, 1):
            continue
        if not rest:
            return None
        res = []
        # random-looking combinations avoid components shared by m and a
        # single partner polynomial
        for lam in range(1, 12):
            combo = sh[1]
            for k, p in enumerate(sh[2:], start=1):
                combo = combo + p * (lam ** k)
            r = resultant(m, combo, 1)
            if r:
                res.append(r)
            if len(res) == 2 or len(sh) == 2:
                break
        if not res:
            # all partners vanish on a common component of m
            return None
        d = upoly.trim(res[0].to_upoly(0)) if not res[0].is_constant() else [res[0].constant_value()]
        for r in res[1:]:
            d = upoly.gcd(d, r.to_upoly(0) if not r.is_constant() else [r.constant_value()])
        if len(d) <= 1:
            return []
        sf = [Fraction(1)]
        for fac, _k in upoly.squarefree_factors(d):
            sf = upoly.mul(sf, fac)
        out = []
        ok = True
        for ff in factor_over(sf, base):
            L, emb, a0 = _root_field(ff)
            uni = []
            for p in sh:
                pl = _embed_poly(p, emb) if L is not None else p
                q = pl.evaluate({0: a0})
                uni.append(q.to_upoly(1) if not q.is_constant() else ([q.constant_value()] if q else []))
            g = uni[0]
            for u in uni[1:]:
                g = upoly.gcd(g, u)
            if len(g) <= 1:
                continue
            g = upoly.quo(g, upoly.gcd(g, upoly.derivative(g)))
            if len(g) > 2:
                ok = False
                break
            b0 = -g[0]
            out.append((L, ff, (a0 + b0 * c, b0)))
        if ok:
            return out
    return None


def _root_field(ff: FieldFactor):
    if ff.base is None and ff.degree == 1:
        return None, (lambda x: x), -Fraction(ff.factor[0])
    return root_field(ff)


def univariate_common_zeros(polys, base=None):
    """Orbits of common roots of univariate dense polynomials over ``base``."""
    g = []
    first = True
    for p in polys:
        if first:
            g, first = upoly.trim(p), False
        else:
            g = upoly.gcd(g, p)
    if not g:
        raise ValueError("polynomials vanish identically")
    if len(g) <= 1:
        return []
    sf = [Fraction(1)]
    for fac, _k in upoly.squarefree_factors(g):
        sf = upoly.mul(sf, fac)
    out = []
    for ff in factor_over(sf, base):
        L, emb, r = _root_field(ff)
        out.append((L, ff, r))
    return out


def _dehomogenize(F: MultiPoly, fixed: int, names2) -> MultiPoly:
    """Set variable ``fixed`` to 1, keeping the other two as affine coordinates."""
    keep = [i for i in range(3) if i != fixed]
    terms = {}
    for e, c in F.terms.items():
        k = (e[keep[0]], e[keep[1]])
        terms[k] = terms.get(k, 0) + c
    return MultiPoly(terms, names2)


def projective_zero_orbits(forms, names=PLANE_VARS, weights=(1, 1, 1)):
    """Orbits of common zeros of weighted forms on P(1,1,k).

    Charts: ``names[0] = 1``; then ``names[0] = 0, names[1] = 1``; then the
    point ``(0:0:1)``.  Each orbit carries the dehomogenized forms in its
    chart (``local``), translated to nothing; callers translate as needed.
    """
    out = []
    n0, n1, n2 = names
    # chart A
    la = [_dehomogenize(F, 0, (n1, n2)) for F in forms]
    pts = affine_common_zeros(la)
    if pts is None:
        raise NotInClassification("the polynomials share a common component", forms=forms)
    for L, ff, pt in pts:
        out.append(PointOrbit(f"{n0}=1", (n1, n2), L, pt, ff.degree, tuple(la), 0))
    # chart B: n0 = 0, n1 = 1, local coordinates (n0, n2)
    lb = [_dehomogenize(F, 1, (n0, n2)) for F in forms]
    restr = []
    for p in lb:
        q = p.evaluate({0: 0})
        restr.append(q.to_upoly(1) if not q.is_constant() else ([q.constant_value()] if q else []))
    if all(not r for r in restr):
        raise NotInClassification("the polynomials share the line {%s = 0}" % n0, forms=forms)
    for L, ff, r in univariate_common_zeros(restr):
        out.append(PointOrbit(f"{n0}=0,{n1}=1", (n0, n2), L, (Fraction(0), r), ff.degree, tuple(lb), 1))
    # the point (0:0:1)
    if all(F.evaluate({0: 0, 1: 0, 2: 1}) == 0 for F in forms):
        if weights[2] != 1:
            raise NotInClassification("the curve passes through the orbifold point (0:0:1)")
        lc = [_dehomogenize(F, 2, (n0, n1)) for F in forms]
        out.append(PointOrbit(f"{n0}=0,{n1}=0", (n0, n1), None, (Fraction(0), Fraction(0)), 1, tuple(lc), 2))
    return out


def local_germ(orbit: PointOrbit, index: int = 0) -> MultiPoly:
    """The ``index``-th chart polynomial translated to the orbit's point."""
    p = orbit.local[index]
    if orbit.field is not None:
        L = orbit.field
        p = p.map_coeffs(lambda c: _to_field(c, L))
    return p.translate(orbit.point)


def chart_poly(F: MultiPoly, orbit: PointOrbit) -> MultiPoly:
    """Dehomogenize a form on the same chart as ``orbit``."""
    return _dehomogenize(F, orbit.fixed, orbit.coords)


def germ_in_chart(F: MultiPoly, orbit: PointOrbit) -> MultiPoly:
    """Germ of the form ``F`` at the orbit's representative point."""
    p = chart_poly(F, orbit)
    if orbit.field is not None:
        L = orbit.field
        p = p.map_coeffs(lambda c: _to_field(c, L))
    return p.translate(orbit.point)


def _to_field(c, L):
    if isinstance(c, NFElement):
        if c.field == L:
            return c
        if c.is_rational():
            return L(c.rational())
        raise ValueError("coefficient from an unrelated number field")
    return L(c)


def singular_orbits_projective(F: MultiPoly, names=PLANE_VARS, weights=(1, 1, 1)):
    """Singular points of the (squarefree) curve ``F = 0`` with their germ reports."""
    if not is_squarefree(F):
        raise ValueError("singular locus requires a squarefree curve")
    grads = [F.diff(i) for i in range(3)]
    orbits = projective_zero_orbits([F] + grads, names, weights)
    out = []
    for o in orbits:
        loc = o.local[0]
        # keep only the curve and its two chart partials
        o2 = PointOrbit(o.chart, o.coords, o.field, o.point, o.size, (loc, loc.diff(0), loc.diff(1)), o.fixed)
        out.append(SingularOrbit(o2, classify_germ(local_germ(o2))))
    return _sorted(out)


def singular_orbits_affine(f: MultiPoly, chart: str):
    """Singular points of an affine curve (coefficients in Q or one number field)."""
    pts = affine_common_zeros([f, f.diff(1), f.diff(0)])
    if pts is None:
        raise ValueError("singular locus requires a squarefree curve")
    out = []
    base = f.coefficient_field()
    for L, ff, pt in pts:
        if L is not None and base is not None and ff.base is not None:
            emb = root_field(ff)[1]
            loc = f.map_coeffs(emb)
        else:
            loc = f
        o = PointOrbit(chart, f.names, L, pt, ff.degree, (loc,))
        out.append(SingularOrbit(o, classify_germ(local_germ(o))))
    return _sorted(out)


def _sorted(orbits):
    return sorted(orbits, key=lambda s: (s.orbit.chart, s.orbit.size, str(s.orbit.point)))


# conics


def gram_matrix(f2: MultiPoly):
    f2 = f2 if f2.names == FIBRE_VARS else _in_fibre_ring(f2)
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in f2.terms.items():
        idx = [i for i in range(3) for _ in range(e[i])]
        if len(idx) != 2:
            raise ValueError("f2 is not a quadratic form")
        i, j = idx
        if i == j:
            m[i][i] += c
        else:
            m[i][j] += c / 2
            m[j][i] += c / 2
    return m


def _rank_and_kernel(m):
    rows = [list(r) for r in m]
    n = len(rows[0])
    piv = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                fct = rows[i][col]
                rows[i] = [a - fct * b for a, b in zip(rows[i], rows[r])]
        piv.append(col)
        r += 1
    kernel = []
    for free in range(n):
        if free in piv:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, col in enumerate(piv):
            v[col] = -rows[i][free]
        kernel.append(v)
    return r, kernel


def gram_rank(f2: MultiPoly) -> int:
    return _rank_and_kernel(gram_matrix(f2))[0]


def _squarefree_split(q: Fraction):
    """``q = s^2 * d`` with ``d`` a squarefree integer."""
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    d = 1
    s = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    d *= n
    return Fraction(s, q.denominator), sign * d


def _is_rational_square(q: Fraction):
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


@dataclass(frozen=True)
class ConicAnalysis:
    rank: int
    lines: tuple | None = None  # two coefficient triples, over Q or a quadratic field
    field: NumberField | None = None  # set when the lines are conjugate
    vertex: tuple | None = None  # the point l1 = l2 = 0
    parametrization: tuple | None = None  # (q1, q2, q3) in (u, v)
    rational_point: tuple | None = None

    def to_dict(self):
        d = {"rank": self.rank}
        if self.lines is not None:
            d["lines"] = [_linear_str(l) for l in self.lines]
            d["split_over"] = "Q" if self.field is None else str(self.field).replace("NumberField(", "Q[t]/(")
        if self.parametrization is not None:
            d["parametrization"] = [str(q) for q in self.parametrization]
        return d


def _linear_str(l):
    parts = []
    for c, n in zip(l, PLANE_VARS):
        if c:
            parts.append(f"({c})*{n}")
    return " + ".join(parts) or "0"


def _complement(p):
    """Two unit vectors completing ``p`` to a basis."""
    units = [[Fraction(int(i == k)) for k in range(3)] for i in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            if _rank_and_kernel([list(p), units[i], units[j]])[0] == 3:
                return units[i], units[j]
    raise ValueError("zero vector has no complement")


def _bilinear(m, p, q):
    return sum(m[i][j] * p[i] * q[j] for i in range(3) for j in range(3))


def find_rational_point(m, height: int = 100):
    """A nonzero rational zero of the ternary form with Gram matrix ``m``."""
    for i in range(3):
        if m[i][i] == 0:
            e = [Fraction(0)] * 3
            e[i] = Fraction(1)
            return tuple(e)
    from math import gcd as igcd
    pairs = []
    for h in range(0, height + 1):
        for a in range(-h, h + 1):
            for b in (-h, h) if abs(a) != h else range(-h, h + 1):
                if (a, b) != (0, 0) and igcd(a, b) == 1:
                    pairs.append((a, b))
    seen = set()
    for a, b in pairs:
        if (a, b) in seen or (-a, -b) in seen:
            continue
        seen.add((a, b))
        # f2(a, b, x) = A x^2 + B x + C
        A = m[2][2]
        B = 2 * (m[0][2] * a + m[1][2] * b)
        C = m[0][0] * a * a + 2 * m[0][1] * a * b + m[1][1] * b * b
        disc = B * B - 4 * A * C
        r = _is_rational_square(disc)
        if r is not None:
            x = (-B + r) / (2 * A)
            return (Fraction(a), Fraction(b), x)
    return None


def parametrize_conic(m, point):
    """Quadratic forms ``(q1, q2, q3)`` in ``(u, v)`` tracing the conic through ``point``."""
    P = list(point)
    ei, ej = _complement(P)
    u, v = MultiPoly.gens(("u", "v"))
    comps = []
    # Q = u*ei + v*ej ; x = 2 B(P, Q) Q - f2(Q) P
    Q = [u * ei[k] + v * ej[k] for k in range(3)]
    BPQ = sum((Q[j] * (m[i][j] * P[i]) for i in range(3) for j in range(3)), MultiPoly.zero(("u", "v")))
    f2Q = MultiPoly.zero(("u", "v"))
    for i in range(3):
        for j in range(3):
            if m[i][j]:
                f2Q = f2Q + Q[i] * Q[j] * m[i][j]
    for k in range(3):
        comps.append(BPQ * Q[k] * 2 - f2Q * P[k])
    return tuple(comps)


def conic_analyze(f2: MultiPoly, height: int = 100) -> ConicAnalysis:
    m = gram_matrix(f2)
    rank, kernel = _rank_and_kernel(m)
    if rank <= 1:
        raise NotInClassification("f2 has rank 1 (a double line); not covered by the tables")
    if rank == 3:
        pt = find_rational_point(m, height)
        if pt is None:
            return ConicAnalysis(3)
        return ConicAnalysis(3, parametrization=parametrize_conic(m, pt), rational_point=pt)
    p = kernel[0]
    # coordinates (alpha, u, v) with x = alpha p + u ei + v ej
    ei, ej = _complement(p)
    A = _bilinear(m, ei, ei)
    B = 2 * _bilinear(m, ei, ej)
    C = _bilinear(m, ej, ej)
    # inverse of the change of basis, giving u(x) and v(x) as linear forms
    M = [[p[k], ei[k], ej[k]] for k in range(3)]
    inv = _inverse3(M)
    ux, vx = inv[1], inv[2]
    disc = B * B - 4 * A * C
    if A == 0:
        # B(u, v) = v (B u + C v)
        l1 = vx
        l2 = [B * a + C * b for a, b in zip(ux, vx)]
        return ConicAnalysis(2, (tuple(l1), tuple(l2)), None, tuple(p))
    r = _is_rational_square(disc)
    if r is not None:
        l1 = [2 * A * a + (B - r) * b for a, b in zip(ux, vx)]
        l2 = [2 * A * a + (B + r) * b for a, b in zip(ux, vx)]
        return ConicAnalysis(2, (tuple(l1), tuple(l2)), None, tuple(p))
    s, d = _squarefree_split(disc)
    K = NumberField([-d, 0, 1])
    root = K.gen() * s
    l1 = [K(2 * A * a) + (root * (-1) + B) * b for a, b in zip(ux, vx)]
    l2 = [K(2 * A * a) + (root + B) * b for a, b in zip(ux, vx)]
    return ConicAnalysis(2, (tuple(l1), tuple(l2)), K, tuple(p))


def _inverse3(M):
    n = 3
    aug = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        p = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[p] = aug[p], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def linear_form(coeffs) -> MultiPoly:
    x = MultiPoly.gens(FIBRE_VARS, FIBRE_WEIGHTS)
    acc = MultiPoly.zero(FIBRE_VARS, FIBRE_WEIGHTS)
    for c, g in zip(coeffs, x[:3]):
        if c:
            acc = acc + g * c
    return acc


# unigonal reduction


def unigonal_reduce(model: FiberModel, conic: ConicAnalysis | None = None) -> MultiPoly:
    """Pull ``f6`` back along a parametrization of the conic to P(1,1,4)."""
    if model.parametrization is not None:
        qs = tuple(q.embed(("u", "v")) if q.names != ("u", "v") else q for q in model.parametrization)
        f2 = _in_fibre_ring(model.f2)
        check = f2.drop(PLANE_VARS).compose(list(qs))
        if check:
            raise InvalidModel(["supplied parametrization does not lie on f2 = 0"])
    else:
        conic = conic or conic_analyze(model.f2)
        if conic.rank != 3:
            raise ValueError("unigonal reduction needs an irreducible conic")
        if conic.parametrization is None:
            raise NotInClassification(
                "no rational point on f2 = 0 of height <= 100; supply a parametrization "
                "(three quadratic forms in u, v) explicitly")
        qs = conic.parametrization
    for q in qs:
        if q and q.homogeneous_degree(weighted=False) != 2:
            raise InvalidModel(["parametrization must consist of quadratic forms in u, v"])
    u, v, y = MultiPoly.gens(P114_VARS, P114_WEIGHTS)
    imgs = [q.embed(P114_VARS, P114_WEIGHTS) for q in qs] + [y]
    F = _in_fibre_ring(model.f6).compose(imgs, P114_VARS, P114_WEIGHTS)
    return F


# line restriction


@dataclass(frozen=True)
class LineRestriction:
    pattern: tuple
    cubic: tuple  # c0..c3 of c3 Y^3 + c2 Y^2 S + c1 Y S^2 + c0 S^3, S = s^2
    halves: tuple  # two restricted sextics phi_i(s, w, y)
    reduced: tuple  # per half: squarefree?
    conjugate: bool

    def to_dict(self):
        return {
            "pattern": list(self.pattern),
            "cubic": [str(c) for c in self.cubic],
            "halves_reduced": list(self.reduced),
            "conjugate_lines": self.conjugate,
        }


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def half_sextic(f6: MultiPoly, p, b) -> MultiPoly:
    """``f6(s*p + w*b, y)`` in the weighted plane P(1,1,2)[s, w, y]."""
    s, w, y = MultiPoly.gens(P112_VARS, P112_WEIGHTS)
    imgs = [s * p[k] + w * b[k] for k in range(3)] + [y]
    return _in_fibre_ring(f6).compose(imgs, P112_VARS, P112_WEIGHTS)


def line_restriction(model: FiberModel, conic: ConicAnalysis | None = None) -> LineRestriction:
    conic = conic or conic_analyze(model.f2)
    if conic.rank != 2:
        raise ValueError("line restriction needs f2 of rank 2")
    l1, l2 = conic.lines
    if _rank2(l1, l2):
        raise ValueError("l1 = l2")
    p = conic.vertex
    f6 = _in_fibre_ring(model.f6)
    s = MultiPoly.var("s", ("s", "y"))
    y = MultiPoly.var("y", ("s", "y"), (1, 2))
    s = MultiPoly.var("s", ("s", "y"), (1, 2))
    restr = f6.compose([s * p[0], s * p[1], s * p[2], y], ("s", "y"), (1, 2))
    cubic = [Fraction(0)] * 4
    for (a, k), c in restr.terms.items():
        cubic[k] = c
    pattern = tuple(upoly.root_multiplicities(upoly.trim(cubic)))
    halves = []
    for l in (l1, l2):
        b = _cross(l, p)
        halves.append(half_sextic(f6, p, b))
    reduced = tuple(is_squarefree(h) for h in halves)
    return LineRestriction(pattern, tuple(cubic), tuple(halves), reduced, conic.field is not None)


def _rank2(l1, l2) -> bool:
    """True when the two coefficient vectors are proportional."""
    c = _cross(l1, l2)
    return all(not x for x in c)


def half_singularities(half: MultiPoly):
    """Singular orbits of one half away from the double curve (chart w = 1)."""
    aff = _dehomogenize(half, 1, ("s", "y"))
    return singular_orbits_affine(aff, "w=1")
