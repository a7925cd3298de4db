"""Exact axis-parallel segment representations of apex gadgets.

The construction starts from a front line drawing with ranks.  The apex
becomes the vertical segment x = 0 and original vertex ``v_i`` the horizontal
segment at height i.  Every edge turns into a rectilinear path ``ell_e`` whose
pieces are owned by the chain of subdivision vertices.  Each path starts at
the original the edge leaves from (its alpha end), alternates between vertical
and horizontal pieces, and always ends with a vertical piece.  That last piece
is what :func:`extend_to_k` splits to lengthen the chain by two.

All coordinates are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .errors import (
    InternalConsistencyError,
    InvalidInputError,
    InvalidParameterError,
    UnsupportedSizeError,
)
from .frontline import EdgePoset, FrontLineDrawing, Side
from .graph import ApexGadget, Edge, _check_k, subdivision_vertex

Point = tuple[Fraction, Fraction]

TENTH = Fraction(1, 10)
HALF = Fraction(1, 2)


class Orientation(Enum):
    H = "H"
    V = "V"


@dataclass(frozen=True)
class Segment:
    """Closed axis-parallel segment.  ``fixed`` is y for H and x for V."""

    owner: str
    orientation: Orientation
    fixed: Fraction
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidInputError(f"segment of {self.owner!r} has lo > hi")

    @classmethod
    def through(cls, owner: str, p: Point, q: Point) -> Segment:
        (x1, y1), (x2, y2) = p, q
        if x1 == x2:
            return cls(owner, Orientation.V, x1, min(y1, y2), max(y1, y2))
        if y1 == y2:
            return cls(owner, Orientation.H, y1, min(x1, x2), max(x1, x2))
        raise InternalConsistencyError(f"piece of {owner!r} is not axis-parallel")

    @property
    def endpoints(self) -> tuple[Point, Point]:
        if self.orientation is Orientation.H:
            return (self.lo, self.fixed), (self.hi, self.fixed)
        return (self.fixed, self.lo), (self.fixed, self.hi)


def epsilon(k: int, n: int) -> Fraction:
    return Fraction(1, k * k * n**5)


@dataclass(frozen=True)
class EdgeTrace:
    """The polyline ell_e of one edge, from its alpha end onward."""

    edge: Edge
    alpha: str
    side: Side
    rank: int
    zeta: int
    xpos: Fraction
    points: tuple[Point, ...]

    @property
    def pieces(self) -> int:
        return len(self.points) - 1

    def owners(self) -> list[str]:
        """Gadget vertex owning each piece, counted from the alpha end.

        Chains run from the edge's first endpoint, so a path that starts at
        the second endpoint is read against the chain.
        """
        k = self.pieces
        if self.alpha == self.edge[0]:
            ts = range(1, k + 1)
        else:
            ts = range(k, 0, -1)
        return [subdivision_vertex(self.edge, t) for t in ts]

    def segments(self) -> list[Segment]:
        owners = self.owners()
        return [
            Segment.through(owners[t], self.points[t], self.points[t + 1])
            for t in range(self.pieces)
        ]

    @property
    def tail_base(self) -> Fraction:
        """x of the undisturbed vertical line the last piece drifts from."""
        if self.side is Side.LEFT:
            return -self.xpos
        return self.xpos

    @property
    def drift(self) -> Fraction:
        return self.points[-1][0] - self.tail_base


@dataclass(frozen=True, eq=False)
class Arrangement:
    n: int
    k: int
    segments: tuple[Segment, ...]
    apex: str | None = None
    traces: Mapping[Edge, EdgeTrace] = field(default_factory=dict, repr=False)

    def by_owner(self) -> dict[str, list[Segment]]:
        out: dict[str, list[Segment]] = {}
        for s in self.segments:
            out.setdefault(s.owner, []).append(s)
        return out


def _assemble(n, k, apex_seg, original_segs, traces) -> Arrangement:
    segments = [apex_seg, *original_segs]
    ordered = sorted(traces.values(), key=lambda tr: (tr.rank, tr.zeta))
    for tr in ordered:
        segs = tr.segments()
        if tr.alpha != tr.edge[0]:
            segs.reverse()  # chain index order
        segments.extend(segs)
    return Arrangement(n, k, tuple(segments), apex_seg.owner, dict(traces))


def _edge_trace(e, placement, pos, rank, n) -> EdgeTrace:
    side = placement.side
    if side.crossover:
        alpha = placement.left_attach
        i, j = pos[placement.left_attach], pos[placement.right_attach]
    else:
        alpha = min(e, key=pos.__getitem__)
        i, j = sorted((pos[e[0]], pos[e[1]]))
    zeta = n * min(i, j) + max(i, j)
    xpos = rank + Fraction(zeta, n**4)
    eps = epsilon(3, n)
    mid = Fraction(i + j, 2)
    if side is Side.LEFT:
        pts = ((-xpos, i), (-xpos, mid), (-xpos - eps, mid), (-xpos - eps, j))
    elif side is Side.RIGHT:
        pts = ((xpos, i), (xpos, mid), (xpos + eps, mid), (xpos + eps, j))
    else:
        top = n + rank if side is Side.ABOVE else -rank
        pts = ((-xpos, i), (-xpos, top), (xpos, top), (xpos, j))
    pts = tuple((Fraction(x), Fraction(y)) for x, y in pts)
    return EdgeTrace(e, alpha, side, rank, zeta, xpos, pts)


def _check_gadget(d: FrontLineDrawing, gadget: ApexGadget) -> None:
    if set(d.ordering) != set(gadget.originals) or set(d.assignment) != set(gadget.chains):
        raise InvalidInputError("drawing does not belong to this gadget")
    if len(d.ordering) < 4:
        raise UnsupportedSizeError(f"construction needs at least 4 vertices, got {len(d.ordering)}")


def _build_k3(d: FrontLineDrawing, p: EdgePoset, apex: str) -> Arrangement:
    n = len(d.ordering)
    pos = d.position

    reach_left = {v: 0 for v in d.ordering}
    reach_right = {v: 0 for v in d.ordering}
    for e in d.edges:
        pl, r = d.assignment[e], p.rank[e]
        if pl.side is Side.LEFT:
            lefts, rights = e, ()
        elif pl.side is Side.RIGHT:
            lefts, rights = (), e
        else:
            lefts, rights = (pl.left_attach,), (pl.right_attach,)
        for v in lefts:
            reach_left[v] = max(reach_left[v], r)
        for v in rights:
            reach_right[v] = max(reach_right[v], r)

    apex_seg = Segment(apex, Orientation.V, Fraction(0), HALF, n + HALF)
    originals = [
        Segment(v, Orientation.H, Fraction(pos[v]), -reach_left[v] - TENTH, reach_right[v] + TENTH)
        for v in d.ordering
    ]
    traces = {e: _edge_trace(e, d.assignment[e], pos, p.rank[e], n) for e in d.edges}
    return _assemble(n, 3, apex_seg, originals, traces)


def synthesize_k3(d: FrontLineDrawing, p: EdgePoset, gadget: ApexGadget) -> Arrangement:
    """Segments for the k = 3 gadget from a valid drawing and its ranks."""
    if gadget.k != 3:
        raise InvalidParameterError(f"base construction needs a k=3 gadget, got k={gadget.k}")
    _check_gadget(d, gadget)
    return _build_k3(d, p, gadget.apex)


def _extend_trace(tr: EdgeTrace, k: int, n: int) -> EdgeTrace:
    (lam, mu), (lam2, pi) = tr.points[-2], tr.points[-1]
    if lam != lam2:
        raise InternalConsistencyError(f"last piece of {tr.edge} is not vertical")
    if lam == 0:
        raise InternalConsistencyError(f"last piece of {tr.edge} lies on x = 0")
    sigma = 1 if lam > 0 else -1
    mid = (mu + pi) / 2
    shifted = lam + sigma * epsilon(k + 2, n)
    pts = tr.points[:-1] + ((lam, mid), (shifted, mid), (shifted, pi))
    return EdgeTrace(tr.edge, tr.alpha, tr.side, tr.rank, tr.zeta, tr.xpos, pts)


def extend_to_k(arr: Arrangement, target_k: int) -> Arrangement:
    """Lengthen every chain by two pieces at a time until it has target_k."""
    _check_k(target_k)
    if target_k < arr.k:
        raise InvalidParameterError(f"cannot shrink an arrangement from k={arr.k} to k={target_k}")
    if target_k == arr.k:
        return arr
    if len(arr.segments) > 1 + arr.n and not arr.traces:
        raise InvalidInputError("arrangement carries no edge traces to extend")
    traces = dict(arr.traces)
    for k in range(arr.k, target_k, 2):
        traces = {e: _extend_trace(tr, k, arr.n) for e, tr in traces.items()}
    return _assemble(arr.n, target_k, arr.segments[0], arr.segments[1:1 + arr.n], traces)


def synthesize(d: FrontLineDrawing, p: EdgePoset, gadget: ApexGadget) -> Arrangement:
    """Arrangement for ``gadget`` at its own k: the k = 3 base, then extended."""
    _check_gadget(d, gadget)
    return extend_to_k(_build_k3(d, p, gadget.apex), gadget.k)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or "/" not in s:
        raise InvalidInputError(f"rational must be a 'p/q' string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad rational {s!r}") from exc


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {
        "n": arr.n,
        "k": arr.k,
        "segments": [
            {
                "owner": s.owner,
                "orientation": s.orientation.value,
                "fixed": format_rational(s.fixed),
                "span": [format_rational(s.lo), format_rational(s.hi)],
            }
            for s in arr.segments
        ],
    }


def arrangement_from_dict(data: dict) -> Arrangement:
    try:
        segs = tuple(
            Segment(
                item["owner"],
                Orientation(item["orientation"]),
                parse_rational(item["fixed"]),
                parse_rational(item["span"][0]),
                parse_rational(item["span"][1]),
            )
            for item in data["segments"]
        )
        return Arrangement(int(data["n"]), int(data["k"]), segs)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed arrangement: {exc}") from exc


def arrangement_to_json(arr: Arrangement) -> str:
    return json.dumps(arrangement_to_dict(arr), indent=2, sort_keys=True) + "\n"
