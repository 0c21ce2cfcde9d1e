"""Independent reference computations used by the tests.

Nothing here imports the algebra of the package under test: every oracle
works on sympy expressions or plain Python data.
"""
from __future__ import annotations

import random
from collections import Counter, defaultdict
from fractions import Fraction

import sympy as sp

x, y = sp.symbols("x y")
x1, x2, x3, yy = sp.symbols("x1 x2 x3 y")
u, v = sp.symbols("u v")


def expr(text):
    return sp.sympify(text.replace("^", "**"), locals={"x1": x1, "x2": x2, "x3": x3, "y": yy, "x": x})


# linear algebra over Q


def rank_q(rows):
    """Rank of a list of dict rows (column -> Fraction) by Gaussian elimination."""
    pivots = {}
    r = 0
    for row in rows:
        row = {k: Fraction(c) for k, c in row.items() if c}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                r += 1
                break
            p = pivots[col]
            factor = row[col] / p[col]
            for k, c in p.items():
                nv = row.get(k, 0) - factor * c
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def _terms(p, gens):
    poly = sp.Poly(sp.expand(p), *gens)
    return {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}


def local_algebra_dim(gens_exprs, gens=(x, y), cap=40):
    """dim Q[x,y]_(x,y) / I for an ideal I supported at the origin.

    Computes dim Q[x,y] / (I + m^N) for growing N and stops at the first N
    where two consecutive values agree, which forces m^N into I locally.
    Returns None when no stabilization happens below ``cap``.
    """
    polys = [_terms(g, gens) for g in gens_exprs]
    prev = None
    for N in range(1, cap):
        monos = [(a, d - a) for d in range(N) for a in range(d + 1)]
        index = {m: k for k, m in enumerate(monos)}
        rows = []
        for p in polys:
            for a, b in monos:
                row = {}
                for (i, j), c in p.items():
                    m = (i + a, j + b)
                    if m in index:
                        row[index[m]] = row.get(index[m], 0) + c
                rows.append(row)
        dim = len(monos) - rank_q(rows)
        if prev is not None and dim == prev:
            return dim
        prev = dim
    return None


def milnor_oracle(f, gens=(x, y)):
    return local_algebra_dim([sp.diff(f, gens[0]), sp.diff(f, gens[1])], gens)


def intersection_oracle(f, g, gens=(x, y)):
    return local_algebra_dim([f, g], gens)


def multiplicity_oracle(f, gens=(x, y)):
    poly = sp.Poly(sp.expand(f), *gens)
    return min(sum(m) for m in poly.monoms())


def tangent_cone_oracle(f, gens=(x, y)):
    """Multiplicities of the tangent directions, over the algebraic closure."""
    poly = sp.Poly(sp.expand(f), *gens)
    m = min(sum(mm) for mm in poly.monoms())
    cone = sp.Poly(sum(c * gens[0] ** a * gens[1] ** b for (a, b), c in poly.terms() if a + b == m), *gens)
    out = []
    for fac, k in sp.sqf_list(cone)[1]:
        out += [k] * sp.Poly(fac, *gens).total_degree()
    return tuple(sorted(out, reverse=True))


# point counting


def count_points(polys, gens=(x, y)):
    """Number of distinct common zeros over Q-bar (None if not finite).

    A projection can only merge points, so the count is the maximum over a
    few sheared projections of the squarefree degree of the eliminant.
    """
    best = 0
    for c in (0, 3, -7):
        sheared = [sp.expand(p.subs(gens[1], gens[1] + c * gens[0])) for p in polys]
        n = _projected_count(sheared, gens)
        if n is None:
            return None
        best = max(best, n)
    return best


def _projected_count(polys, gens):
    G = sp.groebner([sp.expand(p) for p in polys], *gens, order="lex")
    if list(G.exprs) == [1]:
        return 0
    if not G.is_zero_dimensional:
        return None
    last = [p for p in G.exprs if not p.has(gens[0])]
    return sp.degree(sp.sqf_part(sp.Poly(last[0], gens[1])), gens[1])


def rational_points(polys, gens=(x, y)):
    G = sp.groebner([sp.expand(p) for p in polys], *gens, order="lex")
    if list(G.exprs) == [1]:
        return []
    last = [p for p in G.exprs if not p.has(gens[0])][0]
    out = []
    for r in sp.Poly(last, gens[1]).ground_roots():
        sub = [sp.expand(p.subs(gens[1], r)) for p in G.exprs]
        sub = [p for p in sub if p != 0]
        g = sub[0]
        for p in sub[1:]:
            g = sp.gcd(g, p)
        for s in sp.Poly(g, gens[0]).ground_roots() if sp.Poly(g, gens[0]).degree() > 0 else []:
            out.append((s, r))
    return out


def random_projective_change(rng):
    while True:
        M = sp.Matrix(3, 3, lambda i, j: rng.randint(-4, 4))
        if M.det() != 0:
            return M


def projective_chart(F, M):
    """F(M (x, y, 1)) as an affine polynomial in x, y."""
    img = M * sp.Matrix([x, y, 1])
    return sp.expand(F.subs({x1: img[0], x2: img[1], x3: img[2]}, simultaneous=True))


# classification by invariants alone


def label_from_invariants(m, mu, cone):
    if m <= 1:
        return "Smooth"
    if m == 2:
        return "A"
    if m == 3:
        if cone in ((1, 1, 1), (2, 1)):
            return "D"
        if mu in (6, 7, 8):
            return "E"
        if mu == 10:
            return "TildeE8"
        if mu is not None and mu >= 11:
            return "Cusp"
    if m == 4:
        if cone == (1, 1, 1, 1) and mu == 9:
            return "TildeE7"
        if cone in ((2, 1, 1), (2, 2)) and mu is not None and mu >= 10:
            return "Cusp"
    return "Other"


def reduced_curve_labels(F, seed=0):
    """Labels of the singular points of a reduced plane sextic.

    Double points are counted without being located (they are all A_k); the
    points of multiplicity at least three must be rational and are
    classified from their invariants.
    """
    rng = random.Random(seed)
    M = random_projective_change(rng)
    f = projective_chart(F, M)
    fx, fy = sp.diff(f, x), sp.diff(f, y)
    total = count_points([f, fx, fy])
    seconds = [sp.diff(f, x, 2), sp.diff(f, x, y), sp.diff(f, y, 2)]
    triple = count_points([f, fx, fy] + seconds)
    labels = Counter()
    pts = rational_points([f, fx, fy] + seconds)
    if len(pts) != triple:
        raise AssertionError("a point of multiplicity >= 3 is not rational")
    for a, b in pts:
        g = sp.expand(f.subs({x: x + a, y: y + b}, simultaneous=True))
        labels[label_from_invariants(multiplicity_oracle(g), milnor_oracle(g), tangent_cone_oracle(g))] += 1
    labels["A"] += total - triple
    return labels


def row_from_labels(labels, rank3_suffix="h"):
    special = {k: n for k, n in labels.items() if k not in ("A", "D", "E") and n}
    if not special:
        return f"I.{rank3_suffix}"
    if set(special) <= {"TildeE7", "TildeE8"}:
        pair = (special.get("TildeE7", 0), special.get("TildeE8", 0))
        if pair in ((1, 0), (0, 1), (0, 2)):
            return f"II.0{rank3_suffix}"
    if special == {"Cusp": 1}:
        return f"III.0{rank3_suffix}"
    return "Unclassified"


# unigonal branch curve on P(1,1,4)


def unigonal_labels(f6_text):
    F = sp.expand(expr(f6_text).subs({x1: u ** 2, x2: u * v, x3: v ** 2}, simultaneous=True))
    labels = Counter()
    # chart v = 1, in sheared coordinates so that projection to y is injective
    aff = sp.expand(F.subs(v, 1))
    g = sp.expand(aff.subs({u: x + 3 * y + 1, yy: y - 2 * x + 5}, simultaneous=True))
    labels.update(_affine_labels(g))
    # points with v = 0: chart u = 1, i.e. the line v = 0 in coordinates (v, y)
    h = sp.expand(F.subs(u, 1))
    g = sp.expand(h.subs({v: x, yy: y}, simultaneous=True))
    for lab, pt in _affine_labels(g, with_points=True):
        if pt is None or pt[0] == 0:
            labels[lab] += 1
    return labels


def _affine_labels(f, with_points=False):
    fx, fy = sp.diff(f, x), sp.diff(f, y)
    seconds = [sp.diff(f, x, 2), sp.diff(f, x, y), sp.diff(f, y, 2)]
    total = count_points([f, fx, fy])
    triple = count_points([f, fx, fy] + seconds)
    pts = rational_points([f, fx, fy] + seconds)
    if len(pts) != triple:
        raise AssertionError("a point of multiplicity >= 3 is not rational")
    out = []
    for a, b in pts:
        g = sp.expand(f.subs({x: x + a, y: y + b}, simultaneous=True))
        out.append((label_from_invariants(multiplicity_oracle(g), milnor_oracle(g), tangent_cone_oracle(g)), (a, b)))
    if with_points:
        # double points located too, so that the caller can filter by chart
        for a, b in rational_points([f, fx, fy]):
            g = sp.expand(f.subs({x: x + a, y: y + b}, simultaneous=True))
            if multiplicity_oracle(g) == 2:
                out.append(("A", (a, b)))
        return out
    return [lab for lab, _ in out] + ["A"] * (total - triple)


# square part and contact data for double-locus sextics


def square_split(F):
    """(g, h) with F = c g^2 h from sympy's factorization."""
    _, facs = sp.factor_list(F)
    g, h = sp.Integer(1), sp.Integer(1)
    for p, k in facs:
        g *= p ** (k // 2)
        h *= p ** (k % 2)
    return sp.expand(g), sp.expand(h)


def double_locus_row(F, seed=0):
    rng = random.Random(seed)
    g, h = square_split(F)
    dg = sp.Poly(g, x1, x2, x3).total_degree()
    dh = sp.Poly(h, x1, x2, x3).total_degree() if h.free_symbols else 0
    M = random_projective_change(rng)
    ga, ha = projective_chart(g, M), projective_chart(h, M)
    gsing = count_points([ga, sp.diff(ga, x), sp.diff(ga, y)])
    nodes = []
    for a, b in rational_points([ga, sp.diff(ga, x), sp.diff(ga, y)]):
        loc = sp.expand(ga.subs({x: x + a, y: y + b}, simultaneous=True))
        nodes.append((multiplicity_oracle(loc), milnor_oracle(loc), ha.subs({x: a, y: b}) != 0))
    nodal = gsing > 0 and len(nodes) == gsing and all(n == (2, 1, True) for n in nodes)
    if dg == 3:
        if dh:
            return "Unclassified"
        return "II.3" if gsing == 0 else ("III.3" if nodal else "Unclassified")
    contact = count_points([ga, ha])
    jac = sp.expand(sp.diff(ga, x) * sp.diff(ha, y) - sp.diff(ga, y) * sp.diff(ha, x))
    tangent = count_points([ga, ha, jac])
    tpts = rational_points([ga, ha, jac])
    mults = []
    for a, b in tpts:
        gl = sp.expand(ga.subs({x: x + a, y: y + b}, simultaneous=True))
        hl = sp.expand(ha.subs({x: x + a, y: y + b}, simultaneous=True))
        mults.append(intersection_oracle(gl, hl))
    # singularities of h off g
    hs = [ha, sp.diff(ha, x), sp.diff(ha, y)]
    hsing_total = count_points(hs)
    hsec = [sp.diff(ha, x, 2), sp.diff(ha, x, y), sp.diff(ha, y, 2)]
    htriple = rational_points(hs + hsec)
    hlabels = []
    for a, b in htriple:
        loc = sp.expand(ha.subs({x: x + a, y: y + b}, simultaneous=True))
        if ga.subs({x: a, y: b}) != 0:
            hlabels.append(label_from_invariants(multiplicity_oracle(loc), milnor_oracle(loc), tangent_cone_oracle(loc)))
    if tangent == 0 and gsing == 0 and contact == dg * dh:
        ok = all(lab in ("D", "E", "TildeE7") for lab in hlabels) and hlabels.count("TildeE7") <= 1
        return f"II.{dg}" if ok else "Unclassified"
    if len(tpts) != tangent or any(m is None or m > 2 for m in mults):
        return "Unclassified"
    if any(lab not in ("D", "E") for lab in hlabels):
        return "Unclassified"
    if gsing and not nodal:
        return "Unclassified"
    if dg == 1 and contact <= 3:
        return "III.1"
    if dg == 2 and (contact < 4 or (nodal and contact == 4)):
        return "III.2"
    return "Unclassified"


def line_pattern(f2_text, f6_text):
    """Root pattern of the sextic over the vertex of a rank-2 conic."""
    Q = sp.Matrix(sp.hessian(expr(f2_text), (x1, x2, x3))) / 2
    ker = Q.nullspace()
    assert len(ker) == 1
    p = ker[0]
    s = sp.Symbol("s")
    r = sp.expand(expr(f6_text).subs({x1: p[0] * s, x2: p[1] * s, x3: p[2] * s}, simultaneous=True))
    cubic = sp.Poly(r.subs(s, 1), yy)
    if sp.discriminant(cubic) != 0:
        return (1, 1, 1)
    facs = sp.sqf_list(cubic)[1]
    return tuple(sorted((k for fac, k in facs for _ in range(sp.degree(fac, yy))), reverse=True))


# resultants


def sylvester_resultant(a, b):
    """Resultant of two dense univariate coefficient lists (low to high) as a determinant."""
    a = list(a)
    b = list(b)
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    m, n = len(a) - 1, len(b) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(a)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(b)) + [0] * (size - n - 1 - i))
    return sp.Matrix(rows).det()


# Kulikov configurations, checked directly from the JSON layout


def reference_kulikov_ok(cfg: dict) -> bool:
    """Brute-force restatement of every numerical condition on a config dict."""
    comps = cfg["components"]
    curves = cfg["doubleCurves"]
    triples = cfg["triplePoints"]
    typ = cfg["declaredType"]
    hd = {c["id"]: {int(k): w for k, w in c["HD"].items()} for c in comps}
    kind = {c["id"]: c["kind"] for c in comps}
    # H.D agrees on the two sides, and is never negative
    for k, d in enumerate(curves):
        if hd[d["i"]].get(k, 0) != hd[d["j"]].get(k, 0):
            return False
    for c in comps:
        for k, d in enumerate(curves):
            if c["id"] in (d["i"], d["j"]) and hd[c["id"]].get(k, 0) < 0:
                return False
    # triple point formula
    for d in curves:
        target = 0 if typ == "II" or d["curveKind"] == "nodalRational" else -2
        if d["selfIntOnI"] + d["selfIntOnJ"] != target:
            return False
    if sum(c["H2"] for c in comps) != 2:
        return False
    total_hd = {}
    for c in comps:
        total_hd[c["id"]] = sum(hd[c["id"]].get(k, 0) for k, d in enumerate(curves) if c["id"] in (d["i"], d["j"]))
    cls = {}
    for c in comps:
        cls[c["id"]] = 0 if c["H2"] > 0 else (1 if total_hd[c["id"]] > 0 else 2)
    if sum(1 for k in cls.values() if k == 0) > 2:
        return False
    if any(cls[c] == 1 and total_hd[c] % 2 for c in cls):
        return False
    adj = defaultdict(set)
    for d in curves:
        adj[d["i"]].add(d["j"])
        adj[d["j"]].add(d["i"])
    ids = [c["id"] for c in comps]
    # connectivity by repeated relaxation
    reach = {ids[0]} if ids else set()
    for _ in ids:
        reach |= {m for r in reach for m in adj[r]}
    connected = bool(ids) and reach == set(ids)
    if typ == "II":
        if triples or len(comps) < 2 or not connected or len(curves) != len(comps) - 1:
            return False
        if any(d["i"] == d["j"] for d in curves):
            return False
        if len({frozenset((d["i"], d["j"])) for d in curves}) != len(curves):
            return False
        deg = {i: len(adj[i]) for i in ids}
        if sorted(deg.values()) != sorted([1, 1] + [2] * (len(ids) - 2)):
            return False
        for i in ids:
            want = "rational" if deg[i] == 1 else "ellipticRuled"
            if kind[i] != want:
                return False
        if any(d["curveKind"] != "smoothElliptic" for d in curves):
            return False
        for i in ids:
            if kind[i] == "ellipticRuled" and cls[i] == 0 and not any(cls[m] == 2 for m in adj[i]):
                return False
        return True
    if any(kind[i] != "rational" for i in ids):
        return False
    if any(d["curveKind"] == "smoothElliptic" for d in curves):
        return False
    if not connected or len(ids) - len(curves) + len(triples) != 2:
        return False
    uses = Counter(k for t in triples for k in t)
    if any(uses[k] != 2 for k in range(len(curves))):
        return False
    for i in ids:
        if cls[i] == 0 and all(hd[i].get(k, 0) == 0 for k, d in enumerate(curves) if i in (d["i"], d["j"])):
            if any(cls[m] != 2 for m in ids if m != i):
                return False
    return True


# irreducibility over Z by Kronecker's method (desk scale)


def _divisors(n):
    n = abs(n)
    if n == 0:
        return None
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            out += [d, -d]
    return out


def kronecker_irreducible(coeffs):
    """Irreducibility over Q of an integer polynomial (low to high), degree <= 6.

    Any factor of degree k <= n/2 takes values dividing p(a) at k+1 integer
    points; every choice of divisors is interpolated and trial-divided.
    """
    import itertools
    t = sp.Symbol("t")
    p = sp.Poly(list(reversed(coeffs)), t)
    n = p.degree()
    if n <= 1:
        return True
    for k in range(1, n // 2 + 1):
        pts = []
        a = 0
        while len(pts) < k + 1:
            val = p.eval(a)
            if val == 0:
                return False  # a rational root: linear factor t - a
            pts.append((a, int(val)))
            a = -a if a > 0 else -a + 1
        choices = [_divisors(v) for _, v in pts]
        for vals in itertools.product(*choices):
            q = sp.interpolate(list(zip([a for a, _ in pts], vals)), t)
            qp = sp.Poly(q, t)
            if qp.degree() != k or not all(c.is_integer for c in qp.all_coeffs()):
                continue
            if p.rem(qp).is_zero:
                return False
    return True


# global bookkeeping


def quotient_dim(polys, gens):
    """dim Q[gens] / (polys) via standard monomials of a grevlex Groebner basis."""
    G = sp.groebner([sp.expand(p) for p in polys], *gens, order="grevlex")
    leads = [sp.Poly(g, *gens).monoms(order="grevlex")[0] for g in G.exprs]
    if any(all(e == 0 for e in lm) for lm in leads):
        return 0
    n = len(gens)
    # every variable needs a pure power among the leads for finiteness
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in leads if all(e == 0 for j, e in enumerate(lm) if j != i)]
        if not pure:
            raise ValueError("ideal is not zero-dimensional")
        bounds.append(min(pure))
    count = 0

    def rec(i, mono):
        nonlocal count
        if i == n:
            if not any(all(a >= b for a, b in zip(mono, lm)) for lm in leads):
                count += 1
            return
        for e in range(bounds[i]):
            rec(i + 1, mono + (e,))
    rec(0, ())
    return count


def total_milnor_oracle(F, seed=0, cap=8):
    """Sum of Milnor numbers over the singular points of a reduced plane curve.

    In a generic affine chart this is the length of (f_x, f_y) at points of
    the curve.  Adding f^N removes the points off the curve; once the length
    is the same for N and N + 1, f^N lies in (f_x, f_y) at every curve point.
    """
    f = projective_chart(F, random_projective_change(random.Random(seed)))
    fx, fy = sp.diff(f, x), sp.diff(f, y)
    prev = None
    for n in range(1, cap):
        d = quotient_dim([fx, fy, f ** n], (x, y))
        if d == prev:
            return d
        prev = d
    raise ValueError("no stabilization")


def oracle_row(entry, seed=0):
    """Table row of a corpus entry computed from sympy invariants alone."""
    F = expr(entry["f6"])
    if entry["model"] == "hyperelliptic":
        g, _h = square_split(F)
        if not g.free_symbols:
            return row_from_labels(reduced_curve_labels(F, seed))
        return double_locus_row(F, seed)
    Q = sp.Matrix(sp.hessian(expr(entry["f2"]), (x1, x2, x3)))
    if Q.rank() == 3:
        return row_from_labels(unigonal_labels(entry["f6"]), "u")
    pattern = line_pattern(entry["f2"], entry["f6"])
    return {(1, 1, 1): "II.4", (2, 1): "III.4"}.get(pattern, "Unclassified")
