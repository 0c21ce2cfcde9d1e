"""Classification of plane curve germs and of the double-cover surface
germs ``z^2 = f`` they define.

A germ is a polynomial in two variables with coefficients in Q or a number
field, already translated so that the point of interest is the origin.  The
decision tree uses only exact invariants: multiplicity, the root pattern of
the tangent cone, the Milnor number and, where needed, one blow-up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import upoly
from .algebra.factor import factor_over
from .algebra.poly import MultiPoly
from .algebra.polyalg import divexact, gcd
from .errors import K3DegError


class GermError(K3DegError):
    """The germ violates the classifier's contract (zero, or not reduced)."""


@dataclass(frozen=True)
class SingularityClass:
    label: str
    params: tuple = ()
    diagnostic: str = ""

    def __str__(self):
        if not self.params:
            return self.label
        return f"{self.label}({','.join(str(p) for p in self.params)})"

    # family predicates used throughout the fibre classifier

    @property
    def is_ade(self) -> bool:
        return self.label in ("A", "D", "E6", "E7", "E8")

    @property
    def is_elliptic(self) -> bool:
        return self.label in ("TildeE7", "TildeE8")

    @property
    def is_cusp(self) -> bool:
        return self.label == "Cusp"

    @property
    def is_unclassified(self) -> bool:
        return self.label == "Unclassified"

    def to_dict(self):
        d = {"label": self.label, "name": str(self)}
        if self.params:
            d["params"] = list(self.params)
        if self.diagnostic:
            d["diagnostic"] = self.diagnostic
        return d


SMOOTH = SingularityClass("Smooth")


def A(k):
    return SingularityClass("A", (k,))


def D(k):
    return SingularityClass("D", (k,))


def Cusp(q, r):
    if not ((q == 3 and r >= 7) or (q >= 4 and r >= 5)) or q > r:
        return SingularityClass("Unclassified", (), f"T(2,{q},{r}) outside the multiplicity-two cusp range")
    return SingularityClass("Cusp", (q, r))


def unclassified(msg):
    return SingularityClass("Unclassified", (), msg)


@dataclass(frozen=True)
class GermReport:
    cls: SingularityClass
    multiplicity: int
    milnor: int | None  # None encodes an infinite Milnor number
    pattern: tuple = ()
    notes: tuple = field(default=())

    def to_dict(self):
        return {
            "class": self.cls.to_dict(),
            "multiplicity": self.multiplicity,
            "milnor": "inf" if self.milnor is None else self.milnor,
            "tangent_cone": list(self.pattern),
        }


def _check(f: MultiPoly):
    if len(f.names) != 2:
        raise GermError("germs live in two affine variables")
    if not f:
        raise GermError("zero germ")


def multiplicity(f: MultiPoly) -> int:
    """Order of vanishing at the origin."""
    _check(f)
    return f.low_degree()


def _field_of(*polys):
    for p in polys:
        k = p.coefficient_field()
        if k is not None:
            return k
    return None


def _cone_univariate(f: MultiPoly, m: int):
    """``(e0, B(1,t))`` for the tangent cone ``B`` of degree ``m``.

    ``e0`` is the multiplicity of the direction ``(0:1)``.
    """
    cone = f.homogeneous_part(m)
    b = [Fraction(0)] * (m + 1)
    for (i, j), c in cone.terms.items():
        b[j] = c
    b = upoly.trim(b)
    return m - (len(b) - 1), b


def tangent_cone_pattern(f: MultiPoly) -> tuple:
    """Root multiplicities of the tangent cone, in decreasing order."""
    m = multiplicity(f)
    if m < 1:
        return ()
    e0, b = _cone_univariate(f, m)
    mults = upoly.root_multiplicities(b)
    if e0:
        mults.append(e0)
    return tuple(sorted(mults, reverse=True))


def _ord_x(coeffs) -> int:
    for i, c in enumerate(coeffs):
        if c:
            return i
    raise ValueError("zero polynomial has no order")


def _restrict_y0(F: MultiPoly):
    """Dense list of ``F(x, 0)``."""
    n = max((e[0] for e in F.terms if e[1] == 0), default=-1)
    out = [Fraction(0)] * (n + 1)
    for e, c in F.terms.items():
        if e[1] == 0:
            out[e[0]] = c
    return upoly.trim(out)


def _div_y(F: MultiPoly) -> MultiPoly:
    return F.new({(e[0], e[1] - 1): c for e, c in F.terms.items()})


def _truncate(F: MultiPoly, bound: int) -> MultiPoly:
    return F.new({e: c for e, c in F.terms.items() if e[0] + e[1] <= bound})


def intersection_multiplicity(F: MultiPoly, G: MultiPoly, cap: int = 20000):
    """Local intersection number of ``F`` and ``G`` at the origin.

    Returns ``None`` when the curves share a component through the origin.
    """
    if not F or not G:
        return None
    if F.constant_value() or G.constant_value():
        return 0
    top = F.degree() + G.degree()
    bound = 16
    while True:
        # modulo m^bound the answer is exact whenever it comes out below
        # bound, and a shared component can never produce such an answer
        n = _fulton(_truncate(F, bound - 1), _truncate(G, bound - 1), cap, bound)
        if n is not None and n < bound:
            return n
        if bound >= top:
            break
        bound *= 2
    c = gcd(F, G)
    if not c.is_constant():
        if not c.constant_value():
            return None
        F, G = divexact(F, c), divexact(G, c)
    return _fulton(F, G, cap, None)


def _fulton(F, G, cap, bound):
    total = 0
    for _ in range(cap):
        if F.constant_value() or G.constant_value():
            return total
        if bound is not None and total >= bound:
            return None
        r = _restrict_y0(F)
        s = _restrict_y0(G)
        if not r and not s:
            return None
        if not r:
            total += _ord_x(s)
            F = _div_y(F)
            continue
        if not s:
            total += _ord_x(r)
            G = _div_y(G)
            continue
        if len(r) > len(s):
            F, G, r, s = G, F, s, r
        shift = len(s) - len(r)
        xs = F.new({(shift, 0): Fraction(1)})
        # rescaling keeps the ideal and stops coefficient growth
        G = (G * r[-1] - F * xs * s[-1]).normalized()
        if bound is not None:
            G = _truncate(G, bound - 1)
    raise GermError("intersection multiplicity did not terminate")


def milnor_number(f: MultiPoly):
    """Milnor number at the origin, or ``None`` if it is infinite."""
    _check(f)
    if f.constant_value():
        return 0
    fx, fy = f.diff(0), f.diff(1)
    if not fx and not fy:
        return None
    if not fx or not fy:
        # f depends on one variable only; the singular locus is a union of lines
        nz = fx or fy
        return 0 if nz.constant_value() else None
    return intersection_multiplicity(fx, fy)


def _shear(f: MultiPoly, t0) -> MultiPoly:
    """``f(x, y + t0*x)``."""
    x, y = MultiPoly.gens(f.names, f.weights)
    return f.compose([x, y + x * t0])


def _swap(f: MultiPoly) -> MultiPoly:
    return f.new({(e[1], e[0]): c for e, c in f.terms.items()})


def _blow_up(f: MultiPoly, m: int) -> MultiPoly:
    """Strict transform in the chart ``y = x*y1`` (tangent direction (1:0))."""
    return f.new({(e[0] + e[1] - m, e[1]): c for e, c in f.terms.items()})


def _directions(f: MultiPoly, m: int, field):
    """Tangent directions with multiplicity ``k >= 2`` that are rational over ``field``.

    Returns ``(rational, irrational)``: a list of ``(k, t0)`` where ``t0`` is
    the slope (``None`` for the vertical direction), and a list of
    ``(k, degree)`` for factors that do not split over ``field``.
    """
    e0, b = _cone_univariate(f, m)
    rational, irrational = [], []
    if e0 >= 2:
        rational.append((e0, None))
    for fac, k in upoly.squarefree_factors(b):
        if k < 2:
            continue
        if len(fac) == 2:
            rational.append((k, -fac[0]))
            continue
        for ff in factor_over(fac, field):
            if ff.degree == 1:
                rational.append((k, -ff.factor[0]))
            else:
                irrational.append((k, ff.degree))
    return rational, irrational


def _strict_transform_at(f: MultiPoly, m: int, t0) -> MultiPoly:
    g = _swap(f) if t0 is None else (_shear(f, t0) if t0 else f)
    return _blow_up(g, m)


def _report(cls, m, mu, pattern, *notes):
    return GermReport(cls, m, mu, tuple(pattern), tuple(notes))


def classify_germ(f: MultiPoly) -> GermReport:
    """Classify the surface germ ``z^2 = f`` at the origin."""
    _check(f)
    if f.constant_value():
        raise GermError("the origin is not on the curve")
    m = multiplicity(f)
    if m == 1:
        return _report(SMOOTH, 1, 0, (1,))
    mu = milnor_number(f)
    pattern = tangent_cone_pattern(f)
    if mu is None:
        raise GermError("germ is not reduced (infinite Milnor number)")
    field = _field_of(f)
    if m == 2:
        return _report(A(mu), m, mu, pattern)
    if m == 3:
        return _classify_triple(f, mu, pattern, field)
    if m == 4:
        return _classify_quadruple(f, mu, pattern, field)
    return _report(unclassified(f"multiplicity {m} is beyond the classified range"), m, mu, pattern)


def _classify_triple(f, mu, pattern, field):
    if pattern == (1, 1, 1):
        return _report(D(4), 3, mu, pattern)
    if pattern == (2, 1):
        return _report(D(mu), 3, mu, pattern)
    if mu in (6, 7, 8):
        return _report(SingularityClass(f"E{mu}"), 3, mu, pattern)
    rational, _ = _directions(f, 3, field)
    (_, t0), = rational
    f1 = _strict_transform_at(f, 3, t0)
    m1 = f1.low_degree()
    p1 = tangent_cone_pattern(f1) if m1 >= 1 else ()
    note = f"strict transform: multiplicity {m1}, cone {list(p1)}"
    if m1 == 3 and p1 == (1, 1, 1) and mu == 10:
        return _report(SingularityClass("TildeE8"), 3, mu, pattern, note)
    if m1 == 3 and p1 == (2, 1) and mu >= 11:
        return _report(Cusp(3, mu - 4), 3, mu, pattern, note)
    return _report(unclassified(f"triple point with cone {{3}}, mu={mu}; {note}"), 3, mu, pattern, note)


def _a_index(f1: MultiPoly):
    """k with the germ of ``f1`` at the origin an A_k (k = 0 when smooth)."""
    if f1.constant_value():
        return None
    m1 = f1.low_degree()
    if m1 == 1:
        return 0
    if m1 == 2:
        return milnor_number(f1)
    return None


def _classify_quadruple(f, mu, pattern, field):
    if pattern == (1, 1, 1, 1):
        if mu == 9:
            return _report(SingularityClass("TildeE7"), 4, mu, pattern)
        return _report(unclassified(f"ordinary quadruple point with mu={mu}"), 4, mu, pattern)
    if pattern not in ((2, 1, 1), (2, 2)):
        return _report(unclassified(f"quadruple point with cone {list(pattern)}"), 4, mu, pattern)
    rational, irrational = _directions(f, 4, field)
    ks = []
    for _, t0 in rational:
        k = _a_index(_strict_transform_at(f, 4, t0))
        if k is None:
            return _report(unclassified("strict transform at a double tangent is not A_k"), 4, mu, pattern)
        ks.append(k)
    if pattern == (2, 1, 1):
        q, r = 4, 5 + ks[0]
    elif irrational:
        # conjugate double tangents: Galois symmetry forces equal indices
        if (mu - 1) % 2:
            return _report(unclassified(f"conjugate double tangents with even mu={mu}"), 4, mu, pattern)
        q = r = (mu - 1) // 2
    else:
        q, r = sorted(5 + k for k in ks)
    if q + r + 1 != mu:
        return _report(unclassified(f"T(2,{q},{r}) fails the check mu = q + r + 1 (mu={mu})"), 4, mu, pattern)
    return _report(Cusp(q, r), 4, mu, pattern)


def at_point(f: MultiPoly, point) -> MultiPoly:
    """Translate ``f`` so that ``point`` becomes the origin."""
    shifted = f.translate(point) if any(point) else f
    return shifted


def classify_at(f: MultiPoly, point) -> GermReport:
    return classify_germ(at_point(f, point))


# non-normal points of z^2 = g^2 h

NORMAL_CROSSING = SingularityClass("NormalCrossing")
PINCH_POINT = SingularityClass("PinchPoint")
DEG_CUSP_A = SingularityClass("DegCuspA")


def DegCuspB(n):
    return SingularityClass("DegCuspB", (n,))


def classify_non_normal(g: MultiPoly, h: MultiPoly) -> SingularityClass:
    """Local type of ``z^2 = g^2 h`` at the origin, a point of ``{g = 0}``."""
    if not g or g.constant_value():
        raise GermError("the origin is not on {g = 0}")
    mg = g.low_degree()
    h0 = h.constant_value()
    if mg == 1:
        if h0:
            return NORMAL_CROSSING
        i = intersection_multiplicity(g, h)
        if i is None:
            return unclassified("h vanishes along g")
        if i == 1:
            return PINCH_POINT
        if i == 2:
            mh = h.low_degree()
            if mh == 1:
                return DegCuspB(1)
            if mh == 2:
                mu = milnor_number(h)
                if mu is not None:
                    return DegCuspB(mu + 1)
            return unclassified("h is singular beyond A_k at a point of g")
        return unclassified(f"g and h meet with multiplicity {i} > 2")
    if mg == 2 and milnor_number(g) == 1:
        if h0:
            return DEG_CUSP_A
        return unclassified("h passes through a node of g")
    return unclassified(f"g has a singularity of multiplicity {mg} beyond a node")


def classify_point(f: MultiPoly) -> SingularityClass:
    """Local class of ``z^2 = f`` at the origin for any nonzero ``f``.

    Splits off the square part first, so it also recognizes the non-normal
    degenerate cusps.
    """
    from .algebra.polyalg import square_part_decompose
    g, h = square_part_decompose(f)
    if g.is_constant() or g.constant_value():
        return classify_germ(h).cls
    return classify_non_normal(g, h)
