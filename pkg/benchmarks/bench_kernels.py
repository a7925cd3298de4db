"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the LR planarity test on grids and stacked triangulations, an exhaustive PHPC
enumeration, and the H/V contact scan on a synthesized arrangement.  Each row
reports the best of N runs for both backends and the speedup.
"""

import argparse
import random
import timeit
from contextlib import contextmanager

from apexrep import _kernels
from apexrep.frontline import synthesize as draw
from apexrep.graph import Graph, build_apex_gadget
from apexrep.planarity import iter_phpc_orderings
from apexrep.pure2dir import synthesize
from apexrep.verifier import scan


def grid(w, h):
    edges = []
    for i in range(w):
        for j in range(h):
            if i + 1 < w:
                edges.append((i * h + j, (i + 1) * h + j))
            if j + 1 < h:
                edges.append((i * h + j, i * h + j + 1))
    return w * h, edges


def stacked(n, seed=3):
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges += [(v, a), (v, b), (v, c)]
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    return n, edges


def wheel(n):
    rim = [f"r{i}" for i in range(1, n)]
    edges = [("hub", r) for r in rim] + list(zip(rim, rim[1:] + rim[:1]))
    return Graph.from_edges(edges)


@contextmanager
def backend(mod):
    saved = _kernels.active, _kernels.lr_is_planar, _kernels.hv_contacts
    _kernels.active, _kernels.lr_is_planar, _kernels.hv_contacts = mod, mod.lr_is_planar, mod.hv_contacts
    try:
        yield
    finally:
        _kernels.active, _kernels.lr_is_planar, _kernels.hv_contacts = saved


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def cases():
    for label, (n, edges) in [("lr_is_planar grid 30x30", grid(30, 30)), ("lr_is_planar stacked 2000", stacked(2000))]:
        yield label, lambda n=n, edges=edges: _kernels.lr_is_planar(n, edges)

    w = wheel(8)
    yield "PHPC enumeration, wheel on 8 vertices", lambda: sum(1 for _ in iter_phpc_orderings(w))

    g = wheel(9)
    d, p = draw(g)
    segs = synthesize(d, p, build_apex_gadget(g, 10)).segments
    yield f"contact scan ({len(segs)} segments)", lambda: scan(segs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels.compiled is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation` first")

    print(f"{'case':40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, fn in cases():
        with backend(_kernels.python):
            slow = best(fn, args.repeat)
        with backend(_kernels.compiled):
            fast = best(fn, args.repeat)
        print(f"{label:40} {slow:10.4f} {fast:11.4f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
