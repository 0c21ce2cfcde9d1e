"""Combinatorial Kulikov central fibres with polarization data.

A configuration records the components of a Type II or Type III central
fibre, the double curves along which they meet and the triple points, along
with the numbers H_i^2 and H_i.D_ij of the polarization.  The checks here are
necessary numerical conditions; passing them says nothing about whether the
configuration is realized by an actual degeneration.
"""
from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .errors import K3DegError

RATIONAL = "rational"
ELLIPTIC_RULED = "ellipticRuled"
COMPONENT_KINDS = (RATIONAL, ELLIPTIC_RULED)

SMOOTH_RATIONAL = "smoothRational"
SMOOTH_ELLIPTIC = "smoothElliptic"
NODAL_RATIONAL = "nodalRational"
CURVE_KINDS = (SMOOTH_RATIONAL, SMOOTH_ELLIPTIC, NODAL_RATIONAL)

ZERO_SURFACE, ONE_SURFACE, TWO_SURFACE = "0-surface", "1-surface", "2-surface"


class InvalidConfig(K3DegError):
    """Structurally broken input: dangling references, wrong types."""


class MalformedConfig(K3DegError):
    """A polarization that cannot be nef on some component."""


@dataclass(frozen=True)
class Component:
    id: object
    kind: str
    H2: int
    HD: dict = field(default_factory=dict)  # double-curve index -> H_i.D_ij


@dataclass(frozen=True)
class DoubleCurve:
    i: object
    j: object
    self_on_i: int
    self_on_j: int
    kind: str


@dataclass(frozen=True)
class KulikovConfig:
    components: tuple
    double_curves: tuple
    triple_points: tuple  # each a sorted triple of double-curve indices
    declared_type: str

    def __post_init__(self):
        ids = [c.id for c in self.components]
        if len(set(ids)) != len(ids):
            raise InvalidConfig("duplicate component ids")
        if self.declared_type not in ("II", "III"):
            raise InvalidConfig(f"declared type must be II or III, got {self.declared_type!r}")
        known = set(ids)
        for c in self.components:
            if c.kind not in COMPONENT_KINDS:
                raise InvalidConfig(f"component {c.id!r}: unknown kind {c.kind!r}")
            if not _is_int(c.H2) or c.H2 < 0:
                raise InvalidConfig(f"component {c.id!r}: H2 must be an integer >= 0")
            for k, v in c.HD.items():
                if not _is_int(k) or not 0 <= k < len(self.double_curves):
                    raise InvalidConfig(f"component {c.id!r}: HD refers to unknown double curve {k!r}")
                if not _is_int(v):
                    raise InvalidConfig(f"component {c.id!r}: HD values must be integers")
                d = self.double_curves[k]
                if c.id not in (d.i, d.j):
                    raise InvalidConfig(f"component {c.id!r}: double curve {k} does not lie on it")
        for n, d in enumerate(self.double_curves):
            if d.i not in known or d.j not in known:
                raise InvalidConfig(f"double curve {n}: endpoint is not a component")
            if d.kind not in CURVE_KINDS:
                raise InvalidConfig(f"double curve {n}: unknown kind {d.kind!r}")
            if not (_is_int(d.self_on_i) and _is_int(d.self_on_j)):
                raise InvalidConfig(f"double curve {n}: self-intersections must be integers")
        for t in self.triple_points:
            if len(t) != 3 or not all(_is_int(k) and 0 <= k < len(self.double_curves) for k in t):
                raise InvalidConfig(f"triple point {list(t)} must name three double curves")

    def component(self, cid) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def hd(self, cid, k) -> int:
        return self.component(cid).HD.get(k, 0)

    # serialization mirrors the field layout one to one

    def to_dict(self):
        return {
            "declaredType": self.declared_type,
            "components": [
                {"id": c.id, "kind": c.kind, "H2": c.H2, "HD": {str(k): v for k, v in sorted(c.HD.items())}}
                for c in self.components
            ],
            "doubleCurves": [
                {"i": d.i, "j": d.j, "selfIntOnI": d.self_on_i, "selfIntOnJ": d.self_on_j, "curveKind": d.kind}
                for d in self.double_curves
            ],
            "triplePoints": [list(t) for t in self.triple_points],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            comps = tuple(
                Component(c["id"], c["kind"], c["H2"], {int(k): v for k, v in c.get("HD", {}).items()})
                for c in data["components"]
            )
            curves = tuple(
                DoubleCurve(d["i"], d["j"], d["selfIntOnI"], d["selfIntOnJ"], d["curveKind"])
                for d in data["doubleCurves"]
            )
            triples = tuple(tuple(sorted(t)) for t in data.get("triplePoints", []))
            return cls(comps, curves, triples, data["declaredType"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidConfig):
                raise
            raise InvalidConfig(f"bad configuration layout: {exc!r}") from exc


def _is_int(v):
    return isinstance(v, int) and not isinstance(v, bool)


@dataclass(frozen=True)
class Violation:
    check: str
    message: str

    def to_dict(self):
        return {"check": self.check, "message": self.message}


# triple point formula


def check_triple_point_formula(config: KulikovConfig) -> list:
    out = []
    for n, d in enumerate(config.double_curves):
        s = d.self_on_i + d.self_on_j
        want = 0 if config.declared_type == "II" or d.kind == NODAL_RATIONAL else -2
        if s != want:
            out.append(Violation("triple-point-formula",
                                 f"double curve {n}: {d.self_on_i} + {d.self_on_j} = {s}, expected {want}"))
    return out


def star_curves(config: KulikovConfig) -> list:
    """Indices of smooth rational double curves with self-intersection -1 on both sides."""
    if config.declared_type != "III":
        return []
    return [n for n, d in enumerate(config.double_curves)
            if d.kind == SMOOTH_RATIONAL and d.self_on_i == -1 and d.self_on_j == -1]


# surface classes


def _hd_values(config, c):
    vals = []
    for k, d in enumerate(config.double_curves):
        if c.id in (d.i, d.j):
            vals.append(c.HD.get(k, 0))
    return vals


def classify_surfaces(config: KulikovConfig) -> dict:
    out = {}
    for c in config.components:
        vals = _hd_values(config, c)
        if any(v < 0 for v in vals):
            raise MalformedConfig(f"component {c.id!r}: H.D < 0 contradicts nefness")
        if c.H2 > 0:
            out[c.id] = ZERO_SURFACE
        elif sum(vals) > 0:
            out[c.id] = ONE_SURFACE
        else:
            out[c.id] = TWO_SURFACE
    return out


# global constraints


def _neighbours(config):
    nb = defaultdict(list)
    for d in config.double_curves:
        nb[d.i].append(d.j)
        nb[d.j].append(d.i)
    return nb


def _connected(config):
    ids = [c.id for c in config.components]
    if not ids:
        return False
    nb = _neighbours(config)
    seen, stack = {ids[0]}, [ids[0]]
    while stack:
        for m in nb[stack.pop()]:
            if m not in seen:
                seen.add(m)
                stack.append(m)
    return len(seen) == len(ids)


def _chain_order(config):
    """Components along the chain, or None if the dual graph is not a path."""
    comps = config.components
    if len(comps) < 2 or len(config.double_curves) != len(comps) - 1:
        return None
    pairs = set()
    for d in config.double_curves:
        if d.i == d.j:
            return None
        p = frozenset((d.i, d.j))
        if p in pairs:
            return None
        pairs.add(p)
    if not _connected(config):
        return None
    nb = _neighbours(config)
    ends = [c.id for c in comps if len(nb[c.id]) == 1]
    if len(ends) != 2:
        return None
    order, prev = [ends[0]], None
    while len(order) < len(comps):
        cur = order[-1]
        nxt = [m for m in nb[cur] if m != prev]
        prev = cur
        order.append(nxt[0])
    return order


def _check_hd_consistency(config):
    out = []
    for k, d in enumerate(config.double_curves):
        a, b = config.hd(d.i, k), config.hd(d.j, k)
        if a != b:
            out.append(Violation("hd-consistency", f"double curve {k}: H.D is {a} on {d.i!r} but {b} on {d.j!r}"))
    return out


def check_global_constraints(config: KulikovConfig) -> list:
    out = _check_hd_consistency(config)
    total = sum(c.H2 for c in config.components)
    if total != 2:
        out.append(Violation("polarization-square", f"sum of H_i^2 is {total}, expected 2"))
    try:
        classes = classify_surfaces(config)
    except MalformedConfig as exc:
        out.append(Violation("nefness", str(exc)))
        return out
    zeros = [cid for cid, k in classes.items() if k == ZERO_SURFACE]
    if len(zeros) > 2:
        out.append(Violation("zero-surfaces", f"{len(zeros)} 0-surfaces, at most 2 allowed"))
    for c in config.components:
        if classes[c.id] == ONE_SURFACE and sum(_hd_values(config, c)) % 2:
            out.append(Violation("adjunction", f"1-surface {c.id!r}: H.D_i = {sum(_hd_values(config, c))} is odd"))
    if config.declared_type == "II":
        out += _check_type_ii(config, classes)
    else:
        out += _check_type_iii(config, classes)
    return out


def _check_type_ii(config, classes):
    out = []
    order = _chain_order(config)
    if order is None:
        out.append(Violation("chain-shape", "components do not form a chain of at least two surfaces"))
    else:
        for pos, cid in enumerate(order):
            want = RATIONAL if pos in (0, len(order) - 1) else ELLIPTIC_RULED
            if config.component(cid).kind != want:
                out.append(Violation("chain-kinds", f"component {cid!r} at chain position {pos} should be {want}"))
    for k, d in enumerate(config.double_curves):
        if d.kind != SMOOTH_ELLIPTIC:
            out.append(Violation("double-curve-kind", f"double curve {k} is {d.kind}, expected smoothElliptic"))
    if config.triple_points:
        out.append(Violation("triple-points", "a Type II fibre has no triple points"))
    nb = _neighbours(config)
    for c in config.components:
        if c.kind == ELLIPTIC_RULED and classes[c.id] == ZERO_SURFACE:
            if not any(classes[m] == TWO_SURFACE for m in nb[c.id]):
                out.append(Violation("type20surf", f"elliptic ruled 0-surface {c.id!r} meets no 2-surface"))
    return out


def _check_type_iii(config, classes):
    out = []
    for c in config.components:
        if c.kind != RATIONAL:
            out.append(Violation("component-kind", f"component {c.id!r} is {c.kind}, expected rational"))
    for k, d in enumerate(config.double_curves):
        if d.kind == SMOOTH_ELLIPTIC:
            out.append(Violation("double-curve-kind", f"double curve {k} is elliptic in a Type III fibre"))
    if not _connected(config):
        out.append(Violation("connected", "dual graph is disconnected"))
    v, e, t = len(config.components), len(config.double_curves), len(config.triple_points)
    if v - e + t != 2:
        out.append(Violation("euler", f"{v} - {e} + {t} = {v - e + t}, expected 2"))
    slots = Counter(k for tp in config.triple_points for k in tp)
    for k in range(e):
        if slots[k] != 2:
            out.append(Violation("faces", f"double curve {k} lies on {slots[k]} triple-point slots, expected 2"))
    for cid, kind in classes.items():
        if kind == ZERO_SURFACE and all(h == 0 for h in _hd_values(config, config.component(cid))):
            others = [m for m in classes if m != cid]
            if any(classes[m] != TWO_SURFACE for m in others):
                out.append(Violation("1cyclelem", f"0-surface {cid!r} has H.D = 0 but another component is not a 2-surface"))
    return out


@dataclass(frozen=True)
class KulikovReport:
    violations: tuple
    surfaces: dict
    star_curves: tuple

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {
            "ok": self.ok,
            "violations": [v.to_dict() for v in self.violations],
            "surfaces": {str(k): v for k, v in self.surfaces.items()},
            "starCurves": list(self.star_curves),
        }


def check(config: KulikovConfig) -> KulikovReport:
    violations = check_triple_point_formula(config) + check_global_constraints(config)
    try:
        surfaces = classify_surfaces(config)
    except MalformedConfig:
        surfaces = {}
    return KulikovReport(tuple(violations), surfaces, tuple(star_curves(config)))


# reference configurations


def chain_config(h2, hd=None, self_ints=None) -> KulikovConfig:
    """Type II chain with rational ends; ``hd[k]`` is H.D on both sides of curve k."""
    n = len(h2)
    hd = hd or [0] * (n - 1)
    self_ints = self_ints or [(-1, 1)] * (n - 1)
    curves = tuple(DoubleCurve(k, k + 1, a, b, SMOOTH_ELLIPTIC) for k, (a, b) in enumerate(self_ints))
    comps = []
    for i in range(n):
        kind = RATIONAL if i in (0, n - 1) else ELLIPTIC_RULED
        inc = {k: hd[k] for k in (i - 1, i) if 0 <= k < n - 1}
        comps.append(Component(i, kind, h2[i], inc))
    return KulikovConfig(tuple(comps), curves, (), "II")


def triangulated_config(faces, h2, self_ints=None) -> KulikovConfig:
    """Type III fibre whose dual complex is the given triangulated sphere.

    Vertices are components, edges double curves, faces triple points.
    """
    verts = sorted({v for f in faces for v in f})
    edges = sorted({tuple(sorted(p)) for f in faces for p in ((f[0], f[1]), (f[1], f[2]), (f[0], f[2]))})
    index = {e: k for k, e in enumerate(edges)}
    self_ints = self_ints or [(1, -3)] * len(edges)
    curves = tuple(DoubleCurve(a, b, s, t, SMOOTH_RATIONAL) for (a, b), (s, t) in zip(edges, self_ints))
    triples = tuple(sorted(tuple(sorted(index[tuple(sorted(p))] for p in ((f[0], f[1]), (f[1], f[2]), (f[0], f[2]))))
                           for f in faces))
    comps = tuple(Component(v, RATIONAL, h2.get(v, 0), {}) for v in verts)
    return KulikovConfig(comps, curves, triples, "III")


TETRAHEDRON_FACES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


def bipyramid_faces(m):
    """Faces of the suspension of an m-gon; m + 2 vertices."""
    top, bottom = m, m + 1
    out = []
    for i in range(m):
        j = (i + 1) % m
        out += [(i, j, top), (i, j, bottom)]
    return tuple(out)


def tetrahedral_config() -> KulikovConfig:
    return triangulated_config(TETRAHEDRON_FACES, {0: 2})


def type_ii_chain_config() -> KulikovConfig:
    return chain_config([1, 0, 1])


def example_config(row: str) -> KulikovConfig:
    """A hand-built configuration matching the Type of a table row.

    II.3 pairs with two rational components of square 1; the other Type II
    rows use the three-component chain; Type III rows use the tetrahedron.
    """
    if row == "II.3":
        return chain_config([1, 1])
    if row.startswith("II."):
        return type_ii_chain_config()
    if row.startswith("III."):
        return tetrahedral_config()
    raise ValueError(f"no Kulikov model for row {row!r}")


# seeded generator


def relabel(config: KulikovConfig, comp_perm: dict, curve_perm: list) -> KulikovConfig:
    """Rename components by ``comp_perm`` and reorder curves: new index n holds old ``curve_perm[n]``."""
    inv = {old: new for new, old in enumerate(curve_perm)}
    curves = tuple(
        DoubleCurve(comp_perm[d.i], comp_perm[d.j], d.self_on_i, d.self_on_j, d.kind)
        for d in (config.double_curves[o] for o in curve_perm)
    )
    comps = tuple(Component(comp_perm[c.id], c.kind, c.H2, {inv[k]: v for k, v in c.HD.items()})
                  for c in config.components)
    triples = tuple(sorted(tuple(sorted(inv[k] for k in t)) for t in config.triple_points))
    return KulikovConfig(comps, curves, triples, config.declared_type)


def _template(rng, max_components):
    options = []
    if max_components >= 2:
        options.append("chain")
    if max_components >= 4:
        options.append("tetra")
    if max_components >= 5:
        options.append("bipyramid")
    if not options:
        return None
    pick = rng.choice(options)
    if pick == "chain":
        n = rng.randint(2, min(max_components, 6))
        h2 = [0] * n
        if rng.random() < 0.5:
            h2[0] = h2[-1] = 1
        else:
            h2[rng.randrange(n)] = 2
        hd = [0] * (n - 1)
        selfs = [(a, -a) for a in (rng.randint(-2, 2) for _ in range(n - 1))]
        return chain_config(h2, hd, selfs)
    faces = TETRAHEDRON_FACES if pick == "tetra" else bipyramid_faces(rng.randint(3, max_components - 2))
    nv = len({v for f in faces for v in f})
    selfs = [(a, -2 - a) for a in (rng.randint(-3, 1) for _ in range(3 * nv - 6))]
    return triangulated_config(faces, {rng.randrange(nv): 2}, selfs)


def _mutate(rng, cfg: KulikovConfig) -> KulikovConfig:
    comps, curves, triples = list(cfg.components), list(cfg.double_curves), list(cfg.triple_points)
    kind = rng.randrange(8)
    if kind == 0 and curves:
        k = rng.randrange(len(curves))
        d = curves[k]
        curves[k] = DoubleCurve(d.i, d.j, d.self_on_i + rng.choice((-1, 1)), d.self_on_j, d.kind)
    elif kind == 1:
        k = rng.randrange(len(comps))
        c = comps[k]
        comps[k] = Component(c.id, c.kind, max(0, c.H2 + rng.choice((-1, 1))), c.HD)
    elif kind == 2 and curves:
        k = rng.randrange(len(curves))
        c = comps[[x.id for x in comps].index(curves[k].i)]
        hd = dict(c.HD)
        hd[k] = hd.get(k, 0) + rng.choice((-1, 1, 2))
        comps[[x.id for x in comps].index(c.id)] = Component(c.id, c.kind, c.H2, hd)
    elif kind == 3:
        k = rng.randrange(len(comps))
        c = comps[k]
        comps[k] = Component(c.id, ELLIPTIC_RULED if c.kind == RATIONAL else RATIONAL, c.H2, c.HD)
    elif kind == 4 and curves:
        k = rng.randrange(len(curves))
        d = curves[k]
        curves[k] = DoubleCurve(d.i, d.j, d.self_on_i, d.self_on_j, rng.choice(CURVE_KINDS))
    elif kind == 5 and triples:
        triples.pop(rng.randrange(len(triples)))
    elif kind == 6:
        return KulikovConfig(tuple(comps), tuple(curves), tuple(triples),
                             "III" if cfg.declared_type == "II" else "II")
    elif kind == 7 and curves:
        # symmetric H.D bump on both sides of one curve
        k = rng.randrange(len(curves))
        d = curves[k]
        ids = [x.id for x in comps]
        for cid in {d.i, d.j}:
            c = comps[ids.index(cid)]
            hd = dict(c.HD)
            hd[k] = hd.get(k, 0) + 1
            comps[ids.index(cid)] = Component(c.id, c.kind, c.H2, hd)
    return KulikovConfig(tuple(comps), tuple(curves), tuple(triples), cfg.declared_type)


def _random_config(rng, max_components):
    n = rng.randint(1, max_components)
    m = rng.randint(0, 2 * n + 1)
    curves = []
    for _ in range(m):
        i, j = rng.randrange(n), rng.randrange(n)
        curves.append(DoubleCurve(i, j, rng.randint(-3, 2), rng.randint(-3, 2), rng.choice(CURVE_KINDS)))
    hd = defaultdict(dict)
    for k, d in enumerate(curves):
        v = rng.choice((0, 0, 0, 1, 2))
        hd[d.i][k] = v
        hd[d.j][k] = v if rng.random() < 0.9 else v + 1
    comps = [Component(i, rng.choice(COMPONENT_KINDS), rng.choice((0, 0, 1, 2)), hd[i]) for i in range(n)]
    triples = []
    if m:
        for _ in range(rng.randint(0, m)):
            triples.append(tuple(sorted(rng.randrange(m) for _ in range(3))))
    return KulikovConfig(tuple(comps), tuple(curves), tuple(triples), rng.choice(("II", "III")))


def generate_configs(seed: int, max_components: int = 12, count: int | None = None):
    """Deterministic stream of configurations, mixing perturbed valid shapes
    with unstructured random data."""
    if not 1 <= max_components <= 12:
        raise ValueError("max_components must lie in 1..12")
    rng = random.Random(seed)
    produced = 0
    while count is None or produced < count:
        cfg = _template(rng, max_components) if rng.random() < 0.6 else None
        if cfg is None:
            cfg = _random_config(rng, max_components)
        else:
            for _ in range(rng.choice((0, 0, 1, 1, 2))):
                cfg = _mutate(rng, cfg)
        ids = [c.id for c in cfg.components]
        perm = ids[:]
        rng.shuffle(perm)
        order = list(range(len(cfg.double_curves)))
        rng.shuffle(order)
        yield relabel(cfg, dict(zip(ids, perm)), order)
        produced += 1
