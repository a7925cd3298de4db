"""Planarity testing and exact desk-scale Planar Hamiltonian Path Completion."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .errors import InvalidInputError
from .graph import Graph, path_edges


def _indexed(g: Graph):
    vs = g.sorted_vertices
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.sorted_edges]
    return vs, index, edges


def is_planar(g: Graph) -> bool:
    vs, _, edges = _indexed(g)
    return _kernels.lr_is_planar(len(vs), edges)


def is_apex(g: Graph) -> str | None:
    """First vertex (in vertex order) whose removal leaves a planar graph."""
    for v in g.sorted_vertices:
        if is_planar(g.without_vertex(v)):
            return v
    return None


@dataclass(frozen=True)
class PhpcCertificate:
    """Hamiltonian order of a planar supergraph of the input graph."""

    ordering: tuple[str, ...]

    def supergraph(self, g: Graph) -> Graph:
        return g.with_edges(path_edges(self.ordering))

    def check(self, g: Graph) -> bool:
        return sorted(self.ordering) == sorted(g.vertices) and is_planar(self.supergraph(g))


def _orderings(n: int, base: list, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Vertex orders (on 0..n-1) in lexicographic order with ``base`` plus the
    order's path planar, one representative per reversal pair.

    Prefixes are pruned as soon as base plus the partial path is non-planar,
    which is sound because adding the remaining path edges cannot restore
    planarity.
    """
    if n <= 1:
        if first in (None, 0):
            yield tuple(range(n))
        return
    present = {frozenset(e) for e in base}
    order: list[int] = []
    used = [False] * n
    extra: list[tuple[int, int]] = []
    lr = _kernels.lr_is_planar

    def extend():
        if len(order) == n:
            if order[0] < order[-1]:
                yield tuple(order)
            return
        prev = order[-1]
        for x in range(n):
            if used[x]:
                continue
            if len(order) == n - 1 and x < order[0]:
                continue
            added = frozenset((prev, x)) not in present
            if added:
                extra.append((prev, x))
                if not lr(n, base + extra):
                    extra.pop()
                    continue
            used[x] = True
            order.append(x)
            yield from extend()
            order.pop()
            used[x] = False
            if added:
                extra.pop()

    starts = range(n - 1) if first is None else [first]
    for s in starts:
        used[s] = True
        order.append(s)
        yield from extend()
        order.pop()
        used[s] = False


def _first_from(args):
    n, base, first = args
    return next(_orderings(n, base, first), None)


def _require_planar(g: Graph) -> None:
    if not is_planar(g):
        raise InvalidInputError("input graph is not planar")


def iter_phpc_orderings(g: Graph) -> Iterator[tuple[str, ...]]:
    """Every witnessing Hamiltonian order in lexicographic order (up to reversal)."""
    _require_planar(g)
    vs, _, edges = _indexed(g)
    for order in _orderings(len(vs), edges):
        yield tuple(vs[i] for i in order)


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("APEXREP_WORKERS", "1")))
    except ValueError:
        return 1


def phpc_decide(g: Graph, workers: int | None = None) -> PhpcCertificate | None:
    """Decide Planar Hamiltonian Path Completion by exhaustive search.

    A planar supergraph with Hamiltonian path v1..vn contains g plus that path,
    and g plus the path is itself such a supergraph, so it suffices to search
    vertex orders.  Returns the lexicographically first witness or ``None``.

    With ``workers > 1`` the search is split by first vertex across
    processes; the earliest block with a witness wins, so the answer does not
    depend on the worker count.
    """
    _require_planar(g)
    vs, _, edges = _indexed(g)
    n = len(vs)
    workers = _default_workers() if workers is None else workers
    if workers > 1 and n > 6:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for hit in pool.map(_first_from, [(n, edges, s) for s in range(n - 1)]):
                if hit is not None:
                    return PhpcCertificate(tuple(vs[i] for i in hit))
        return None
    hit = next(_orderings(n, edges), None)
    if hit is None:
        return None
    return PhpcCertificate(tuple(vs[i] for i in hit))
