"""Independent checks on segment arrangements and the full reduction pipeline.

The intersection test knows nothing about how arrangements are built: it
scales every coordinate to a common denominator and runs a plain pairwise
closed-interval test over integers.
"""

from __future__ import annotations

import json
import math
from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import _kernels
from .errors import ContractViolationError, InvalidInputError
from .frontline import synthesize as synthesize_drawing
from .graph import (
    ApexGadget,
    Graph,
    build_apex_gadget,
    canonical_edge,
    girth,
    is_bipartite,
    path_edges,
    vertex_key,
)
from .planarity import is_planar, phpc_decide
from .pure2dir import Arrangement, Orientation, Segment
from .pure2dir import synthesize as synthesize_arrangement

_INT_LIMIT = 2**62


@dataclass(frozen=True)
class Contacts:
    """Index pairs (i < j) into the scanned segment list."""

    crossing: tuple[tuple[int, int], ...]
    parallel: tuple[tuple[int, int], ...]


def scan(segments: Iterable[Segment]) -> Contacts:
    segs = list(segments)
    values = [v for s in segs for v in (s.fixed, s.lo, s.hi)]
    scale = math.lcm(*(Fraction(v).denominator for v in values)) if values else 1

    def ints(attr):
        return [int(Fraction(getattr(s, attr)) * scale) for s in segs]

    orient = [0 if s.orientation is Orientation.H else 1 for s in segs]
    fixed, lo, hi = ints("fixed"), ints("lo"), ints("hi")
    fits = all(abs(v) < _INT_LIMIT for col in (fixed, lo, hi) for v in col)
    if fits and _kernels.compiled is not None and _kernels.active is _kernels.compiled:
        crossing, parallel = _kernels.compiled.hv_contacts(
            array("b", orient), array("q", fixed), array("q", lo), array("q", hi)
        )
    else:
        crossing, parallel = _kernels.python.hv_contacts(orient, fixed, lo, hi)
    return Contacts(tuple(crossing), tuple(parallel))


def intersection_graph(arr: Arrangement) -> Graph:
    """Owners as vertices; an edge wherever segments of two owners meet."""
    segs = arr.segments
    hits = scan(segs)
    edges = set()
    for i, j in hits.crossing:
        if segs[i].owner != segs[j].owner:
            edges.add(canonical_edge(segs[i].owner, segs[j].owner))
    return Graph(frozenset(s.owner for s in segs), frozenset(edges))


def parallel_contacts(arr: Arrangement) -> list[tuple[str, str]]:
    """Owner pairs whose same-orientation segments touch or overlap."""
    segs = arr.segments
    pairs = {
        canonical_edge(segs[i].owner, segs[j].owner)
        for i, j in scan(segs).parallel
        if segs[i].owner != segs[j].owner
    }
    return sorted(pairs, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))


def _shared_points(s: Segment, t: Segment):
    """Points common to two meeting segments, or None for a positive-length overlap."""
    if s.orientation is not t.orientation:
        h, v = (s, t) if s.orientation is Orientation.H else (t, s)
        return {(v.fixed, h.fixed)}
    lo, hi = max(s.lo, t.lo), min(s.hi, t.hi)
    if lo < hi:
        return None
    p = (lo, s.fixed) if s.orientation is Orientation.H else (s.fixed, lo)
    return {p}


def one_string_check(arr: Arrangement) -> bool:
    """Every meeting owner pair shares exactly one point and nothing overlaps."""
    segs = arr.segments
    hits = scan(segs)
    shared: dict[tuple[str, str], set] = {}
    for i, j in hits.crossing + hits.parallel:
        if segs[i].owner == segs[j].owner:
            continue
        pts = _shared_points(segs[i], segs[j])
        if pts is None:
            return False
        shared.setdefault(canonical_edge(segs[i].owner, segs[j].owner), set()).update(pts)
    return all(len(p) == 1 for p in shared.values())


def extract_hamiltonian_order(arr: Arrangement, apex: str, originals) -> tuple[str, ...]:
    """Originals sorted by where they meet the apex segment, bottom to top."""
    owned = arr.by_owner()
    apex_segs = owned.get(apex, [])
    if len(apex_segs) != 1 or apex_segs[0].orientation is not Orientation.V:
        raise ContractViolationError("apex must own exactly one vertical segment")
    a = apex_segs[0]
    height = {}
    for v in originals:
        points = set()
        for s in owned.get(v, []):
            if s.orientation is Orientation.V:
                if s.fixed == a.fixed and s.lo <= a.hi and a.lo <= s.hi:
                    raise ContractViolationError(f"segment of {v!r} overlaps the apex")
                continue
            if s.lo <= a.fixed <= s.hi and a.lo <= s.fixed <= a.hi:
                points.add(s.fixed)
        if len(points) != 1:
            raise ContractViolationError(
                f"original {v!r} meets the apex in {len(points)} points, expected 1"
            )
        height[v] = points.pop()
    return tuple(sorted(height, key=lambda v: (height[v], vertex_key(v))))


def roundtrip_check(g: Graph, arr: Arrangement, gadget: ApexGadget) -> bool:
    order = extract_hamiltonian_order(arr, gadget.apex, gadget.originals)
    return is_planar(g.with_edges(path_edges(order)))


# ---------------------------------------------------------------------------
# full pipeline
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    n: int
    m: int
    k: int
    girth_bound: int
    phpc: bool
    gadget_props: dict
    ordering: tuple[str, ...] | None = None
    arrangement_props: dict | None = None
    graph_equality: bool | None = None
    roundtrip_planar: bool | None = None
    failures: list[tuple[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "girth_bound": self.girth_bound,
            "phpc": "yes" if self.phpc else "no",
            "ordering": list(self.ordering) if self.ordering is not None else None,
            "gadget_props": dict(self.gadget_props),
            "arrangement_props": dict(self.arrangement_props) if self.arrangement_props else None,
            "graph_equality": self.graph_equality,
            "roundtrip_planar": self.roundtrip_planar,
            "passed": self.passed,
            "failures": [{"check": c, "detail": d} for c, d in self.failures],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def gadget_properties(gadget: ApexGadget) -> dict:
    gg = gadget.gadget
    return {
        "bipartite": is_bipartite(gg) is not None,
        "girth_ok": girth(gg) >= gadget.g,
        "apex_ok": is_planar(gg.without_vertex(gadget.apex)),
    }


def _diff(expected: Graph, got: Graph) -> str:
    missing = sorted(expected.edges - got.edges)
    extra = sorted(got.edges - expected.edges)
    vdiff = sorted(expected.vertices ^ got.vertices)
    return f"missing={missing[:5]} extra={extra[:5]} vertex_mismatch={vdiff[:5]}"


def verify_reduction(g: Graph, girth_bound: int = 6, k: int | None = None) -> VerificationReport:
    """Build, decide, synthesize and check the reduction for ``g``."""
    if not is_planar(g):
        raise InvalidInputError("input graph is not planar")
    gadget = build_apex_gadget(g, girth_bound, k)
    props = gadget_properties(gadget)
    cert = phpc_decide(g)
    report = VerificationReport(
        n=g.n, m=g.m, k=gadget.k, girth_bound=girth_bound, phpc=cert is not None, gadget_props=props
    )
    for name, ok in props.items():
        if not ok:
            report.failures.append((f"gadget.{name}", "property does not hold"))
    if cert is None:
        report.notes.append("no-instance: non-representability is not certified")
        return report

    found = synthesize_drawing(g)
    if found is None:
        report.failures.append(("frontline", "PHPC witness exists but no drawing was found"))
        return report
    drawing, poset = found
    report.ordering = drawing.ordering
    arr = synthesize_arrangement(drawing, poset, gadget)

    gg = gadget.gadget
    owners = [s.owner for s in arr.segments]
    census = len(owners) == 1 + gadget.n + gadget.k * gadget.m and set(owners) == set(gg.vertices)
    census = census and len(set(owners)) == len(owners)
    touching = parallel_contacts(arr)
    one_point = one_string_check(arr)
    report.arrangement_props = {
        "census_ok": census,
        "pure2dir_legal": not touching,
        "one_point_per_pair": one_point,
    }
    if not census:
        report.failures.append(("arrangement.census_ok", f"{len(owners)} segments"))
    if touching:
        report.failures.append(("arrangement.pure2dir_legal", f"parallel contacts {touching[:5]}"))
    if not one_point:
        report.failures.append(("arrangement.one_point_per_pair", "some pair shares more than one point"))

    got = intersection_graph(arr)
    report.graph_equality = census and got == gg
    if not report.graph_equality:
        report.failures.append(("graph_equality", _diff(gg, got)))

    try:
        order = extract_hamiltonian_order(arr, gadget.apex, gadget.originals)
    except ContractViolationError as exc:
        report.roundtrip_planar = False
        report.failures.append(("roundtrip", str(exc)))
        return report
    planar = is_planar(g.with_edges(path_edges(order)))
    report.roundtrip_planar = planar and order == drawing.ordering
    if not planar:
        report.failures.append(("roundtrip", "graph plus extracted path is not planar"))
    elif order != drawing.ordering:
        report.failures.append(("roundtrip", "extracted order differs from the drawing"))
    return report
