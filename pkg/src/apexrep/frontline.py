"""Front line drawings as combinatorial objects.

Vertices sit on a vertical segment at positions 1..n (bottom to top).  An edge
is drawn entirely left of the segment, entirely right of it, or as a crossover
edge that leaves one endpoint to the left, passes above (or below) the
segment, and reaches the other endpoint from the right.

Each edge is reduced to a *chord* ``(side, p, q)``: for Left/Right arcs the two
endpoint positions with p < q, for crossovers the positions of the endpoint
attached from the left and from the right.  Crossing and area containment are
decided on chords alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Mapping

from .errors import InternalConsistencyError, InvalidInputError
from .graph import Edge, Graph, canonical_edge, edge_key, vertex_key
from .planarity import iter_phpc_orderings


class Side(Enum):
    LEFT = "L"
    RIGHT = "R"
    ABOVE = "A"
    BELOW = "B"

    @property
    def crossover(self) -> bool:
        return self in (Side.ABOVE, Side.BELOW)


L, R, A, B = Side.LEFT, Side.RIGHT, Side.ABOVE, Side.BELOW


class Relation(Enum):
    LESS = "e1<=e2"
    GREATER = "e2<=e1"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Placement:
    side: Side
    left_attach: str | None = None
    right_attach: str | None = None

    def __post_init__(self):
        has_attach = self.left_attach is not None or self.right_attach is not None
        if self.side.crossover:
            if self.left_attach is None or self.right_attach is None:
                raise InvalidInputError("crossover placement needs both attach vertices")
        elif has_attach:
            raise InvalidInputError("only crossover placements carry attach vertices")


LEFT_ARC = Placement(L)
RIGHT_ARC = Placement(R)


def above(left_attach: str, right_attach: str) -> Placement:
    return Placement(A, left_attach, right_attach)


def below(left_attach: str, right_attach: str) -> Placement:
    return Placement(B, left_attach, right_attach)


@dataclass(frozen=True, eq=False)
class FrontLineDrawing:
    ordering: tuple[str, ...]
    assignment: Mapping[Edge, Placement]

    @cached_property
    def position(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.ordering, 1)}

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.assignment, key=edge_key))

    def chord(self, e: Edge) -> tuple[Side, int, int]:
        pl = self.assignment[e]
        pos = self.position
        if pl.side.crossover:
            return pl.side, pos[pl.left_attach], pos[pl.right_attach]
        p, q = sorted((pos[e[0]], pos[e[1]]))
        return pl.side, p, q

    @cached_property
    def chords(self) -> dict[Edge, tuple[Side, int, int]]:
        return {e: self.chord(e) for e in self.edges}

    def edges_on(self, side: Side) -> list[Edge]:
        return [e for e in self.edges if self.assignment[e].side is side]

    def with_placement(self, e: Edge, placement: Placement) -> FrontLineDrawing:
        assignment = dict(self.assignment)
        assignment[e] = placement
        return FrontLineDrawing(self.ordering, assignment)


# ---------------------------------------------------------------------------
# pairwise rules
# ---------------------------------------------------------------------------

def _arc_meets_crossover(arc, cross) -> bool:
    side, a, b = arc
    _, i, j = cross
    # the crossover leaves through the arc's side at i (left) or j (right)
    return a < i < b if side is L else a < j < b


def chords_cross(c1, c2) -> bool:
    s1, i1, j1 = c1
    s2, i2, j2 = c2
    if not s1.crossover and not s2.crossover:
        if s1 is not s2:
            return False
        return i1 < i2 < j1 < j2 or i2 < i1 < j2 < j1
    if not s1.crossover:
        return _arc_meets_crossover(c1, c2)
    if not s2.crossover:
        return _arc_meets_crossover(c2, c1)
    if s1 is s2:
        return (i1 - i2) * (j1 - j2) < 0
    if s1 is A:
        return i1 < i2 or j1 < j2
    return i2 < i1 or j2 < j1


def chord_leq(c1, c2) -> bool:
    """area(c1) contained in area(c2)."""
    s1, a, b = c1
    s2, i, j = c2
    if s2 is L or s2 is R:
        return s1 is s2 and i <= a and b <= j
    if s2 is A:
        if s1 is L:
            return i <= a
        if s1 is R:
            return j <= a
        if s1 is A:
            return i <= a and j <= b
        return False
    if s1 is L:
        return b <= i
    if s1 is R:
        return b <= j
    if s1 is B:
        return a <= i and b <= j
    return False


def _check_structure(d: FrontLineDrawing, g: Graph) -> None:
    if sorted(d.ordering, key=vertex_key) != list(g.sorted_vertices):
        raise InvalidInputError("ordering is not a permutation of the graph's vertices")
    if set(d.assignment) != set(g.edges):
        missing = set(g.edges) - set(d.assignment)
        raise InvalidInputError(f"assignment does not match the edge set (missing {len(missing)})")
    for e, pl in d.assignment.items():
        if pl.side.crossover and {pl.left_attach, pl.right_attach} != set(e):
            raise InvalidInputError(f"crossover attach vertices of {e} are not its endpoints")


def crossing_pairs(d: FrontLineDrawing) -> list[tuple[Edge, Edge]]:
    ch = d.chords
    return [(e, f) for e, f in combinations(d.edges, 2) if chords_cross(ch[e], ch[f])]


def validate(d: FrontLineDrawing, g: Graph) -> bool:
    _check_structure(d, g)
    ch = d.chords
    return not any(chords_cross(ch[e], ch[f]) for e, f in combinations(d.edges, 2))


def containment(e1: Edge, e2: Edge, d: FrontLineDrawing) -> Relation:
    if crossing_pairs(d):
        raise InvalidInputError("drawing has crossing edges")
    if e1 == e2:
        return Relation.EQUAL
    c1, c2 = d.chord(e1), d.chord(e2)
    if chord_leq(c1, c2):
        return Relation.LESS
    if chord_leq(c2, c1):
        return Relation.GREATER
    return Relation.INCOMPARABLE


# ---------------------------------------------------------------------------
# poset and ranks
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class EdgePoset:
    rank: Mapping[Edge, int]
    below: Mapping[Edge, frozenset]

    def relation(self, e1: Edge, e2: Edge) -> Relation:
        if e1 == e2:
            return Relation.EQUAL
        if e1 in self.below[e2]:
            return Relation.LESS
        if e2 in self.below[e1]:
            return Relation.GREATER
        return Relation.INCOMPARABLE


def _strict_order(d: FrontLineDrawing) -> dict[Edge, frozenset]:
    ch = d.chords
    return {
        e: frozenset(f for f in d.edges if f != e and chord_leq(ch[f], ch[e]))
        for e in d.edges
    }


def _longest_chains(below: Mapping[Edge, frozenset], edges) -> dict[Edge, int]:
    rank: dict[Edge, int] = {}
    active: set = set()

    def visit(e):
        if e in rank:
            return rank[e]
        if e in active:
            raise InternalConsistencyError(f"containment relation has a cycle through {e}")
        active.add(e)
        r = 1 + max((visit(f) for f in below[e]), default=0)
        active.discard(e)
        rank[e] = r
        return r

    for e in edges:
        visit(e)
    return rank


def ranks(d: FrontLineDrawing) -> EdgePoset:
    if crossing_pairs(d):
        raise InvalidInputError("drawing has crossing edges")
    below_sets = _strict_order(d)
    return EdgePoset(rank=_longest_chains(below_sets, d.edges), below=below_sets)


# ---------------------------------------------------------------------------
# synthesis
# ---------------------------------------------------------------------------

def _options(e: Edge):
    u, v = e
    return (LEFT_ARC, RIGHT_ARC, above(u, v), above(v, u), below(u, v), below(v, u))


def assign_sides(g: Graph, ordering) -> dict[Edge, Placement] | None:
    """Backtracking search for a crossing-free placement of every edge."""
    pos = {v: i for i, v in enumerate(ordering, 1)}
    fixed: dict[Edge, Placement] = {}
    todo = []
    for e in sorted(g.edges, key=lambda e: sorted((pos[e[0]], pos[e[1]]))):
        if abs(pos[e[0]] - pos[e[1]]) == 1:
            fixed[e] = LEFT_ARC
        else:
            todo.append(e)

    chosen: list[tuple] = []
    picks: list[Placement] = []

    def chord_of(e, pl):
        if pl.side.crossover:
            return pl.side, pos[pl.left_attach], pos[pl.right_attach]
        p, q = sorted((pos[e[0]], pos[e[1]]))
        return pl.side, p, q

    def search(k):
        if k == len(todo):
            return True
        e = todo[k]
        for pl in _options(e):
            c = chord_of(e, pl)
            if any(chords_cross(c, other) for other in chosen):
                continue
            chosen.append(c)
            picks.append(pl)
            if search(k + 1):
                return True
            chosen.pop()
            picks.pop()
        return False

    if not search(0):
        return None
    fixed.update(zip(todo, picks))
    return fixed


def synthesize(g: Graph) -> tuple[FrontLineDrawing, EdgePoset] | None:
    """First valid drawing over the witnessing vertex orders, with its ranks."""
    for ordering in iter_phpc_orderings(g):
        assignment = assign_sides(g, ordering)
        if assignment is not None:
            d = FrontLineDrawing(tuple(ordering), assignment)
            return d, ranks(d)
    return None


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def edge_token(e: Edge) -> str:
    return f"{e[0]} {e[1]}"


def drawing_to_dict(d: FrontLineDrawing, poset: EdgePoset | None = None) -> dict:
    edges = []
    for e in d.edges:
        pl = d.assignment[e]
        item = {"u": e[0], "v": e[1], "side": pl.side.value}
        if pl.side.crossover:
            item["left_attach"] = pl.left_attach
            item["right_attach"] = pl.right_attach
        edges.append(item)
    out = {"ordering": list(d.ordering), "edges": edges}
    if poset is not None:
        out["ranks"] = {edge_token(e): poset.rank[e] for e in d.edges}
    return out


def drawing_from_dict(data: dict) -> FrontLineDrawing:
    assignment = {}
    for item in data["edges"]:
        e = canonical_edge(item["u"], item["v"])
        assignment[e] = Placement(
            Side(item["side"]), item.get("left_attach"), item.get("right_attach")
        )
    return FrontLineDrawing(tuple(data["ordering"]), assignment)


def drawing_to_json(d: FrontLineDrawing, poset: EdgePoset | None = None) -> str:
    return json.dumps(drawing_to_dict(d, poset), indent=2, sort_keys=True) + "\n"
