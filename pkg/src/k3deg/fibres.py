"""Assign a validated fibre model its Type and table row.

Classification is two-phase.  First the evidence is gathered: the square
part of the branch sextic, the singular points of every relevant curve with
their local classes, and the contact points of the double locus.  Then every
row predicate of the relevant table is evaluated on that evidence alone.
At most one predicate may hold; the row is that predicate's name, otherwise
the fibre is reported as unclassified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra.polyalg import gcd, is_squarefree, square_part_decompose
from .errors import NotInClassification
from .germs import classify_non_normal, intersection_multiplicity
from .models import (HYPERELLIPTIC, P114_VARS, P114_WEIGHTS, PLANE_VARS, UNIGONAL, FiberModel,
                     conic_analyze, ensure_valid, germ_in_chart, half_singularities,
                     line_restriction, projective_zero_orbits, singular_orbits_projective,
                     unigonal_reduce, _in_fibre_ring)
from .tables import ALL_ROWS, HYPERELLIPTIC_ROWS, UNCLASSIFIED, UNIGONAL_ROWS, annotations, row_type

ADE_LABELS = {"A", "D", "E6", "E7", "E8"}
NON_NORMAL_OK = {"PinchPoint", "DegCuspA", "DegCuspB"}


@dataclass(frozen=True)
class PointRecord:
    """One Galois orbit of special points, as seen by the row predicates.

    ``where`` is ``curve`` (reduced branch curve), ``g`` or ``gh`` (points of
    the double locus), ``h`` (singular points of ``h`` off the double locus)
    or ``half1``/``half2`` (a component over one of two lines).
    """

    where: str
    label: str
    params: tuple
    size: int
    contact: int | None = None  # intersection number of g and h, when relevant
    detail: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        d = {"where": self.where, "label": self.label, "params": list(self.params), "size": self.size}
        if self.contact is not None:
            d["contact"] = self.contact
        d.update(self.detail)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["where"], d["label"], tuple(d.get("params", ())), d["size"], d.get("contact"))


@dataclass(frozen=True)
class Evidence:
    kind: str
    points: tuple = ()
    deg_g: int = 0
    deg_h: int = 0
    reduced: bool = True  # unigonal rank 3: branch curve reduced
    rank: int | None = None
    pattern: tuple = ()
    halves_reduced: tuple = ()

    def where(self, *places):
        return [p for p in self.points if p.where in places]

    def to_dict(self, points=True):
        d = {"kind": self.kind}
        if points:
            d["points"] = [p.to_dict() for p in self.points]
        if self.kind == HYPERELLIPTIC:
            d.update(deg_g=self.deg_g, deg_h=self.deg_h)
        else:
            d.update(rank=self.rank, reduced=self.reduced, pattern=list(self.pattern),
                     halves_reduced=list(self.halves_reduced))
        return d

    @classmethod
    def from_dict(cls, d, points=None):
        pts = tuple(PointRecord.from_dict(p) for p in (d["points"] if points is None else points))
        if d["kind"] == HYPERELLIPTIC:
            return cls(d["kind"], pts, d["deg_g"], d["deg_h"])
        return cls(d["kind"], pts, reduced=d["reduced"], rank=d["rank"],
                   pattern=tuple(d["pattern"]), halves_reduced=tuple(d["halves_reduced"]))


# row predicates


def _size(points, label):
    return sum(p.size for p in points if p.label == label)


def _only(points, allowed):
    return all(p.label in allowed for p in points)


def _elliptic_ok(points):
    n7, n8 = _size(points, "TildeE7"), _size(points, "TildeE8")
    return (n7, n8) in ((1, 0), (0, 1), (0, 2))


def _reduced_type_I(points):
    return _only(points, ADE_LABELS)


def _reduced_type_II(points):
    return _only(points, ADE_LABELS | {"TildeE7", "TildeE8"}) and _elliptic_ok(points)


def _reduced_type_III(points):
    return _only(points, ADE_LABELS | {"Cusp"}) and _size(points, "Cusp") == 1


def _h_ok(ev, allow_e7):
    pts = ev.where("h")
    allowed = ADE_LABELS | ({"TildeE7"} if allow_e7 else set())
    return _only(pts, allowed) and _size(pts, "TildeE7") <= 1


def _double_locus_type_II(ev, k):
    if ev.deg_g != k or (k == 3 and ev.deg_h != 0):
        return False
    nn = ev.where("g", "gh")
    if not _only(nn, {"PinchPoint"}):
        return False
    if sum(p.size for p in ev.where("gh")) != ev.deg_g * ev.deg_h:
        return False
    return _h_ok(ev, allow_e7=True)


def _double_locus_type_III(ev, k):
    if ev.deg_g != k or (k == 3 and ev.deg_h != 0):
        return False
    nn = ev.where("g", "gh")
    if not _only(nn, NON_NORMAL_OK):
        return False
    if not any(p.label in ("DegCuspA", "DegCuspB") for p in nn):
        return False
    if any(p.contact is not None and p.contact > 2 for p in nn):
        return False
    if not _h_ok(ev, allow_e7=False):
        return False
    count = sum(p.size for p in ev.where("gh"))
    nodal = any(p.label == "DegCuspA" for p in nn)
    if k == 1:
        return count <= 3
    if k == 2:
        return count < 4 or (nodal and count == 4)
    return count == 0 and nodal


def _hyper(pred):
    return lambda ev: ev.kind == HYPERELLIPTIC and pred(ev)


def _uni(pred):
    return lambda ev: ev.kind == UNIGONAL and pred(ev)


def _halves_ok(ev, allowed, max_e8):
    for i, red in enumerate(ev.halves_reduced, start=1):
        if red and not _only(ev.where(f"half{i}"), allowed):
            return False
    return _size(ev.where("half1", "half2"), "TildeE8") <= max_e8


ROW_PREDICATES: dict[str, Callable[[Evidence], bool]] = {
    "I.h": _hyper(lambda ev: ev.deg_g == 0 and _reduced_type_I(ev.where("curve"))),
    "II.0h": _hyper(lambda ev: ev.deg_g == 0 and _reduced_type_II(ev.where("curve"))),
    "II.1": _hyper(lambda ev: _double_locus_type_II(ev, 1)),
    "II.2": _hyper(lambda ev: _double_locus_type_II(ev, 2)),
    "II.3": _hyper(lambda ev: _double_locus_type_II(ev, 3)),
    "III.0h": _hyper(lambda ev: ev.deg_g == 0 and _reduced_type_III(ev.where("curve"))),
    "III.1": _hyper(lambda ev: _double_locus_type_III(ev, 1)),
    "III.2": _hyper(lambda ev: _double_locus_type_III(ev, 2)),
    "III.3": _hyper(lambda ev: _double_locus_type_III(ev, 3)),
    "I.u": _uni(lambda ev: ev.rank == 3 and ev.reduced and _reduced_type_I(ev.where("curve"))),
    "II.0u": _uni(lambda ev: ev.rank == 3 and ev.reduced and _reduced_type_II(ev.where("curve"))),
    "III.0u": _uni(lambda ev: ev.rank == 3 and ev.reduced and _reduced_type_III(ev.where("curve"))),
    "II.4": _uni(lambda ev: ev.rank == 2 and ev.pattern == (1, 1, 1) and all(ev.halves_reduced)
                 and _halves_ok(ev, ADE_LABELS | {"TildeE8"}, 2)),
    "III.4": _uni(lambda ev: ev.rank == 2 and ev.pattern == (2, 1) and _halves_ok(ev, ADE_LABELS, 0)),
}
assert set(ROW_PREDICATES) == set(ALL_ROWS)


def matching_rows(ev: Evidence) -> list[str]:
    return [row for row in ALL_ROWS if ROW_PREDICATES[row](ev)]


def evidence_type(ev: Evidence) -> str:
    """Type suggested by the evidence alone: cusps of any kind mean III,
    elliptic points or a double locus mean II, and otherwise I."""
    labels = {p.label for p in ev.points}
    if labels & {"Cusp", "DegCuspA", "DegCuspB"} or ev.pattern == (2, 1):
        return "III"
    if labels & {"TildeE7", "TildeE8"} or ev.deg_g > 0 or ev.pattern == (1, 1, 1):
        return "II"
    return "I"


# evidence collection


def _record(where, cls, orbit, contact=None, report=None):
    detail = {"orbit": orbit.describe()}
    if report is not None:
        detail.update({k: v for k, v in report.to_dict().items() if k != "class"})
    if cls.diagnostic:
        detail["diagnostic"] = cls.diagnostic
    return PointRecord(where, cls.label, cls.params, orbit.size, contact, detail)


def _curve_records(orbits, where):
    return [_record(where, s.report.cls, s.orbit, report=s.report) for s in orbits]


def hyperelliptic_evidence(f6) -> Evidence:
    f6 = f6.drop(PLANE_VARS) if f6.names != PLANE_VARS else f6
    g, h = square_part_decompose(f6)
    dg = g.degree() if not g.is_constant() else 0
    dh = h.degree() if not h.is_constant() else 0
    if dg == 0:
        return Evidence(HYPERELLIPTIC, tuple(_curve_records(singular_orbits_projective(h), "curve")), 0, dh)
    points = []
    common = gcd(g, h)
    if not common.is_constant():
        # exponent-3 factor: g and h share a component, which no row admits
        rec = PointRecord("gh", "Unclassified", (), 0, None,
                          {"diagnostic": f"g and h share the factor {common}"})
        return Evidence(HYPERELLIPTIC, (rec,), dg, dh)
    if dh > 0:
        for o in projective_zero_orbits([g, h]):
            gl, hl = germ_in_chart(g, o), germ_in_chart(h, o)
            i = intersection_multiplicity(gl, hl)
            cls = classify_non_normal(gl, hl)
            points.append(_record("gh", cls, o, contact=i))
    for s in singular_orbits_projective(g):
        o = s.orbit
        hl = germ_in_chart(h, o)
        if not hl.constant_value():
            continue  # already recorded as a contact point
        cls = classify_non_normal(germ_in_chart(g, o), hl)
        points.append(_record("g", cls, o, report=s.report))
    if dh > 0:
        for s in singular_orbits_projective(h):
            if germ_in_chart(g, s.orbit).constant_value():
                points.append(_record("h", s.report.cls, s.orbit, report=s.report))
    total = sum(p.size * p.contact for p in points if p.where == "gh")
    if total != dg * dh:
        raise ArithmeticError(f"contact total {total} differs from {dg}*{dh}")
    return Evidence(HYPERELLIPTIC, tuple(points), dg, dh)


def unigonal_evidence(model: FiberModel) -> Evidence:
    conic = conic_analyze(model.f2) if model.parametrization is None else None
    if conic is None or conic.rank == 3:
        F = unigonal_reduce(model, conic)
        if not is_squarefree(F):
            return Evidence(UNIGONAL, (), reduced=False, rank=3)
        orbits = singular_orbits_projective(F, P114_VARS, P114_WEIGHTS)
        return Evidence(UNIGONAL, tuple(_curve_records(orbits, "curve")), reduced=True, rank=3)
    lr = line_restriction(model, conic)
    points = []
    if lr.conjugate:
        # the halves are Galois conjugate: analyse one and mirror it
        if lr.reduced[0]:
            recs = _curve_records(half_singularities(lr.halves[0]), "half1")
            points += recs
            points += [PointRecord("half2", r.label, r.params, r.size, None, r.detail) for r in recs]
    else:
        for i, (half, red) in enumerate(zip(lr.halves, lr.reduced), start=1):
            if red:
                points += _curve_records(half_singularities(half), f"half{i}")
    return Evidence(UNIGONAL, tuple(points), rank=2, pattern=lr.pattern, halves_reduced=lr.reduced)


# classification


@dataclass(frozen=True)
class Classification:
    type: str | None
    row: str
    evidence: Evidence
    annotations: dict = field(default_factory=dict)
    diagnostics: tuple = ()
    extras: dict = field(default_factory=dict)

    @property
    def inventory(self):
        return self.evidence.points

    def to_dict(self):
        d = {
            "type": self.type,
            "row": self.row,
            "inventory": [p.to_dict() for p in self.evidence.points],
            "evidence": self.evidence.to_dict(points=False),
            "annotations": dict(self.annotations),
            "diagnostics": list(self.diagnostics),
        }
        d.update(self.extras)
        return d


def _diagnose(ev: Evidence) -> list[str]:
    out = []
    bad = [p for p in ev.points if p.label == "Unclassified"]
    for p in bad:
        out.append(f"unclassified point ({p.where}): {p.detail.get('diagnostic', p.detail.get('orbit'))}")
    labels = {p.label for p in ev.points}
    if labels & {"TildeE7", "TildeE8"} and "Cusp" in labels:
        out.append("elliptic and cusp singularities together do not occur in any row")
    if _size(ev.points, "Cusp") > 1:
        out.append("more than one cusp singularity")
    if ev.kind == UNIGONAL and ev.rank == 3 and not ev.reduced:
        out.append("branch curve over the conic is not reduced")
    if ev.kind == UNIGONAL and ev.rank == 2 and ev.pattern not in ((1, 1, 1), (2, 1)):
        out.append(f"restriction to the vertex line has root pattern {list(ev.pattern)}")
    if ev.kind == UNIGONAL and ev.rank == 2 and ev.pattern == (1, 1, 1) and not all(ev.halves_reduced):
        out.append("a component over a line is non-reduced although the three points are distinct")
    for p in ev.where("gh"):
        if p.contact is not None and p.contact > 2:
            out.append(f"g and h meet with multiplicity {p.contact}")
    if not out:
        out.append("no table row predicate holds for this inventory")
    return out


def _annotate(row, ev):
    elliptic = {p.label for p in ev.points if p.label in ("TildeE7", "TildeE8")}
    cusps = [tuple(p.params) for p in ev.points if p.label == "Cusp"]
    return annotations(row, elliptic, cusps)


def classify_evidence(ev: Evidence, extras=None) -> Classification:
    rows = matching_rows(ev)
    if len(rows) > 1:
        raise AssertionError(f"row predicates overlap: {rows}")
    extras = extras or {}
    if not rows:
        return Classification(None, UNCLASSIFIED, ev, {}, tuple(_diagnose(ev)), extras)
    row = rows[0]
    return Classification(row_type(row), row, ev, _annotate(row, ev), (), extras)


def intersection_profile(ev: Evidence) -> dict:
    """Contact points of the double locus with the residual curve."""
    gh = ev.where("gh")
    return {
        "points": [{"orbit": p.detail.get("orbit"), "multiplicity": p.contact, "label": p.label} for p in gh],
        "total": sum(p.size * (p.contact or 0) for p in gh),
        "bezout": ev.deg_g * ev.deg_h,
        "g_smooth": not any(p.where == "g" for p in ev.points),
        "g_nodal": any(p.label == "DegCuspA" for p in ev.points),
        "multiplicities_at_most_2": all((p.contact or 0) <= 2 for p in gh),
    }


def classify_hyperelliptic(f6) -> Classification:
    ensure_valid(FiberModel(HYPERELLIPTIC, f6))
    ev = hyperelliptic_evidence(_in_fibre_ring(f6))
    extras = {"profile": intersection_profile(ev)} if ev.deg_g > 0 else {}
    return classify_evidence(ev, extras)


def classify_unigonal(model: FiberModel) -> Classification:
    ensure_valid(model)
    extras = {}
    if model.parametrization is None:
        extras["conic"] = conic_analyze(model.f2).to_dict()
        if extras["conic"]["rank"] == 2:
            extras["restriction"] = line_restriction(model).to_dict()
    return classify_evidence(unigonal_evidence(model), extras)


def classify(model: FiberModel) -> Classification:
    if model.kind == HYPERELLIPTIC:
        return classify_hyperelliptic(model.f6)
    return classify_unigonal(model)


def back_implication(report: dict) -> bool:
    """Re-evaluate the emitted row's predicate from a serialized report."""
    ev = Evidence.from_dict(report["evidence"], report["inventory"])
    row = report["row"]
    rows = matching_rows(ev)
    if row == UNCLASSIFIED:
        return not rows
    return rows == [row] and report["type"] == row_type(row) and evidence_type(ev) == row_type(row)


__all__ = ["Classification", "Evidence", "PointRecord", "ROW_PREDICATES", "back_implication",
           "classify", "classify_evidence", "classify_hyperelliptic", "classify_unigonal",
           "evidence_type", "matching_rows", "NotInClassification"]
