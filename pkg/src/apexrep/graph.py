"""Simple undirected graphs, the apex gadget construction and its certificates.

Vertices are opaque string tokens.  Every iteration that can leak into an
output goes through :func:`vertex_key`, so results never depend on hash order.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import GraphParseError, InvalidInputError, InvalidParameterError

Edge = tuple[str, str]

_CHUNK = re.compile(r"(\d+)")


def vertex_key(v: str):
    """Natural sort key: digit runs compare numerically, so ``v2 < v10``."""
    parts = _CHUNK.split(v)
    return tuple((0, int(p), p) if i % 2 else (1, 0, p) for i, p in enumerate(parts)), v


def canonical_edge(u: str, v: str) -> Edge:
    if u == v:
        raise InvalidInputError(f"self-loop at {u!r}")
    return (u, v) if vertex_key(u) < vertex_key(v) else (v, u)


def edge_key(e: Edge):
    return vertex_key(e[0]), vertex_key(e[1])


@dataclass(frozen=True)
class Graph:
    vertices: frozenset
    edges: frozenset

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"self-loop at {u!r}")
            if u not in self.vertices or v not in self.vertices:
                raise InvalidInputError(f"edge ({u}, {v}) has an undeclared endpoint")
            if (u, v) != canonical_edge(u, v):
                raise InvalidInputError(f"edge ({u}, {v}) is not in canonical orientation")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Graph:
        vs = set(vertices)
        es = set()
        for u, v in edges:
            vs.add(u)
            vs.add(v)
            es.add(canonical_edge(u, v))
        return cls(frozenset(vs), frozenset(es))

    @cached_property
    def adjacency(self) -> Mapping[str, frozenset]:
        adj: dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def sorted_vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertices, key=vertex_key))

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges, key=edge_key))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: str) -> frozenset:
        return self.adjacency[v]

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and canonical_edge(u, v) in self.edges

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def with_edges(self, edges: Iterable[tuple[str, str]]) -> Graph:
        extra = {canonical_edge(u, v) for u, v in edges}
        return Graph(self.vertices, self.edges | extra)

    def without_vertex(self, v: str) -> Graph:
        return Graph(
            self.vertices - {v},
            frozenset(e for e in self.edges if v not in e),
        )

    def relabel(self, mapping: Mapping[str, str]) -> Graph:
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            (mapping[v] for v in self.vertices),
        )

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def path_edges(ordering) -> list[Edge]:
    return [canonical_edge(a, b) for a, b in zip(ordering, ordering[1:])]


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    One edge per line as two whitespace separated tokens; ``v <token>``
    declares a vertex (needed for isolated ones).  Blank lines and ``#``
    comments are ignored.
    """
    vertices: set[str] = set()
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two tokens, got {len(tokens)}", lineno)
        a, b = tokens
        if a == "v":
            vertices.add(b)
            continue
        if a == b:
            raise GraphParseError(f"self-loop at {a!r}", lineno)
        vertices.update((a, b))
        edges.add(canonical_edge(a, b))
    return Graph(frozenset(vertices), frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = []
    for v in g.sorted_vertices:
        if not g.adjacency[v]:
            lines.append(f"v {v}")
    for u, w in g.sorted_edges:
        # a leading "v" token would read back as a declaration
        lines.append(f"{w} {u}" if u == "v" else f"{u} {w}")
    return "\n".join(lines) + ("\n" if lines else "")


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    One BFS per root; a non-tree edge (x, y) closes a closed walk of length
    dist(x) + dist(y) + 1 through the root, and the minimum over all roots is
    attained by a shortest cycle.
    """
    best = math.inf
    adj = g.adjacency
    for root in g.sorted_vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_bipartite(g: Graph) -> tuple[frozenset, frozenset] | None:
    """BFS 2-colouring.  Each component's smallest vertex lands in the first part."""
    colour: dict[str, int] = {}
    for root in g.sorted_vertices:
        if root in colour:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return (
        frozenset(v for v, c in colour.items() if c == 0),
        frozenset(v for v, c in colour.items() if c == 1),
    )


# ---------------------------------------------------------------------------
# gadget construction
# ---------------------------------------------------------------------------

def subdivision_vertex(e: Edge, t: int) -> str:
    """Identifier of the t-th internal vertex on the chain replacing ``e``.

    Independent of k, so the first chain pieces keep their names when the
    chain is lengthened.
    """
    return f"u{t}({e[0]},{e[1]})"


def _check_k(k) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 3 or k % 2 == 0:
        raise InvalidParameterError(f"k must be an odd integer >= 3, got {k!r}")


def full_subdivision(g: Graph, k: int) -> tuple[Graph, dict[Edge, tuple[str, ...]]]:
    """Replace every edge (x, y) by the path x, u1, ..., uk, y."""
    _check_k(k)
    vertices = set(g.vertices)
    edges = []
    chains = {}
    for e in g.sorted_edges:
        chain = tuple(subdivision_vertex(e, t) for t in range(1, k + 1))
        clash = vertices.intersection(chain)
        if clash:
            raise InvalidInputError(f"vertex label {sorted(clash)[0]!r} collides with a subdivision vertex")
        vertices.update(chain)
        walk = (e[0],) + chain + (e[1],)
        edges.extend(zip(walk, walk[1:]))
        chains[e] = chain
    return Graph.from_edges(edges, vertices), chains


def _fresh_apex(g: Graph) -> str:
    apex = "apex"
    while apex in g.vertices:
        apex = "_" + apex
    return apex


def k_for_girth(girth_bound: int) -> int:
    if not isinstance(girth_bound, int) or girth_bound < 1:
        raise InvalidParameterError(f"girth bound must be a positive integer, got {girth_bound!r}")
    k = max(3, girth_bound - 3)
    return k if k % 2 else k + 1


@dataclass(frozen=True)
class ApexGadget:
    gadget: Graph
    apex: str
    originals: tuple[str, ...]
    chains: Mapping[Edge, tuple[str, ...]] = field(repr=False)
    k: int
    g: int
    source: Graph = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.originals)

    @property
    def m(self) -> int:
        return len(self.chains)

    def parity_classes(self) -> tuple[frozenset, frozenset]:
        """The two colour classes read off the construction: originals and
        even chain positions versus the apex and odd chain positions."""
        a = set(self.originals)
        b = {self.apex}
        for chain in self.chains.values():
            for t, u in enumerate(chain, 1):
                (a if t % 2 == 0 else b).add(u)
        return frozenset(a), frozenset(b)

    def chain_vertex(self, e: Edge, t: int) -> str:
        return self.chains[e][t - 1]


def build_apex_gadget(g: Graph, girth_bound: int = 6, k: int | None = None) -> ApexGadget:
    """Subdivide every edge of ``g`` k times and add an apex joined to the originals.

    ``k`` defaults to the least odd integer >= max(3, girth_bound - 3); an
    explicit ``k`` overrides it.
    """
    if k is None:
        k = k_for_girth(girth_bound)
    else:
        k_for_girth(girth_bound)
        _check_k(k)
    sub, chains = full_subdivision(g, k)
    apex = _fresh_apex(sub)
    gadget = Graph(
        sub.vertices | {apex},
        sub.edges | {canonical_edge(apex, v) for v in g.vertices},
    )
    return ApexGadget(
        gadget=gadget,
        apex=apex,
        originals=g.sorted_vertices,
        chains=chains,
        k=k,
        g=girth_bound,
        source=g,
    )
