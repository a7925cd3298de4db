"""Quick invariant sweep over every small graph, used by ``apexrep selftest``.

Needs nothing beyond the package itself, so it can run on an installed copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .frontline import chord_leq, ranks, synthesize, validate
from .graph import Graph, build_apex_gadget, girth, is_bipartite
from .planarity import is_planar, phpc_decide
from .verifier import verify_reduction


@dataclass
class Outcome:
    name: str
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def _canonical(n: int, edges) -> tuple:
    best = None
    for perm in permutations(range(n)):
        form = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


def _connected(n: int, edges) -> bool:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n


def small_graphs(max_n: int = 5):
    """Connected graphs on 1..max_n vertices, one per isomorphism class."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [p for b, p in enumerate(pairs) if mask >> b & 1]
            if not _connected(n, edges):
                continue
            form = _canonical(n, edges)
            if form in seen:
                continue
            seen.add(form)
            names = [f"v{i + 1}" for i in range(n)]
            yield Graph.from_edges(((names[u], names[v]) for u, v in edges), names)


def run(max_n: int = 5) -> list[Outcome]:
    graphs = [g for g in small_graphs(max_n) if is_planar(g)]
    gadget_fail, agree_fail, poset_fail, pipe_fail = [], [], [], []
    pipelines = 0
    for g in graphs:
        for bound in (6, 8):
            gad = build_apex_gadget(g, bound)
            gg = gad.gadget
            ok = (
                is_bipartite(gg) is not None
                and girth(gg) >= bound
                and is_planar(gg.without_vertex(gad.apex))
                and gg.n == g.n + gad.k * g.m + 1
                and gg.m == (gad.k + 1) * g.m + g.n
            )
            if not ok:
                gadget_fail.append((sorted(g.edges), bound))

        found = synthesize(g)
        if (found is None) != (phpc_decide(g) is None):
            agree_fail.append(sorted(g.edges))
        if found is None:
            continue
        d, p = found
        if not validate(d, g) or p.rank != ranks(d).rank:
            poset_fail.append(sorted(g.edges))
        ch = d.chords
        for e, f in permutations(d.edges, 2):
            if chord_leq(ch[e], ch[f]) and chord_leq(ch[f], ch[e]):
                poset_fail.append((sorted(g.edges), e, f))
        if g.n >= 4:
            for k in (3, 5):
                pipelines += 1
                report = verify_reduction(g, 6, k=k)
                if not report.passed:
                    pipe_fail.append((sorted(g.edges), k, report.failures))
    return [
        Outcome("gadget structure", 2 * len(graphs), gadget_fail),
        Outcome("drawing exists iff PHPC yes", len(graphs), agree_fail),
        Outcome("containment is a partial order", len(graphs), poset_fail),
        Outcome("end-to-end reduction", pipelines, pipe_fail),
    ]
