import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apexrep.errors import InvalidInputError
from apexrep.graph import Graph, build_apex_gadget, path_edges
from apexrep.planarity import PhpcCertificate, is_apex, is_planar, iter_phpc_orderings, phpc_decide

import oracles
from instances import complete, connected_planar, from_nx, octahedron_kleetope, to_nx


def k33(subdivide=False):
    edges = [(f"a{i}", f"b{j}") for i in range(3) for j in range(3)]
    if subdivide:
        edges.remove(("a0", "b0"))
        edges += [("a0", "s"), ("s", "b0")]
    return Graph.from_edges(edges)


def test_small_examples(backend):
    assert is_planar(complete(4))
    assert not is_planar(complete(5))
    assert not is_planar(k33())
    assert not is_planar(k33(subdivide=True))


def test_atlas_against_kuratowski_search(backend):
    for H in nx.graph_atlas_g()[1:]:
        g = from_nx(H)
        expected = oracles.kuratowski_planar(g.vertices, g.edges)
        assert is_planar(g) == expected, sorted(g.edges)
        if g.n >= 3 and g.m > 3 * g.n - 6:
            assert not expected


def test_random_graphs_against_networkx(backend):
    rng = random.Random(5)
    for _ in range(400):
        n = rng.randint(5, 40)
        H = nx.gnm_random_graph(n, rng.randint(n - 1, 3 * n), seed=rng.randrange(10**9))
        assert is_planar(from_nx(H)) == nx.check_planarity(H)[0]


def test_large_maximal_planar_graphs(backend):
    rng = random.Random(11)
    for _ in range(20):
        # stacked triangulation: each new vertex goes into a random face
        H = nx.complete_graph(3)
        faces = [(0, 1, 2)]
        for v in range(3, 80):
            a, b, c = faces.pop(rng.randrange(len(faces)))
            H.add_edges_from([(v, a), (v, b), (v, c)])
            faces += [(a, b, v), (b, c, v), (a, c, v)]
        g = from_nx(H)
        assert is_planar(g)
        u, w = rng.sample([x for x in g.vertices], 2)
        if not g.has_edge(u, w):
            assert not is_planar(g.with_edges([(u, w)]))


def test_is_apex():
    assert is_apex(complete(5)) is not None
    assert is_apex(complete(7)) is None
    gad = build_apex_gadget(complete(4), 6)
    assert is_planar(gad.gadget.without_vertex(gad.apex))


def test_decide_k4():
    cert = phpc_decide(complete(4))
    assert cert == PhpcCertificate(("v1", "v2", "v3", "v4"))
    assert cert.check(complete(4))


def test_decide_star():
    star = Graph.from_edges([("c", f"l{i}") for i in range(1, 5)])
    cert = phpc_decide(star)
    assert cert is not None and cert.check(star)
    assert oracles.naive_phpc(star.vertices, star.edges, oracles.kuratowski_planar)


def test_decide_rejects_non_planar():
    with pytest.raises(InvalidInputError):
        phpc_decide(complete(5))


def test_no_instance():
    g = octahedron_kleetope()
    assert is_planar(g) and g.m == 3 * g.n - 6
    assert phpc_decide(g) is None


def test_trivial_sizes():
    assert phpc_decide(Graph.from_edges([], [])) == PhpcCertificate(())
    assert phpc_decide(Graph.from_edges([], ["a"])) == PhpcCertificate(("a",))
    assert phpc_decide(Graph.from_edges([], ["b", "a"])) == PhpcCertificate(("a", "b"))


def test_disconnected_graph_gets_connecting_path():
    g = Graph.from_edges([("a", "b"), ("c", "d")])
    cert = phpc_decide(g)
    assert cert.ordering == ("a", "b", "c", "d")


def test_first_witness_is_lexicographic():
    g = connected_planar(6, 6)[40]
    vs = g.sorted_vertices
    index = {v: i for i, v in enumerate(vs)}
    orders = list(iter_phpc_orderings(g))
    keys = [[index[v] for v in o] for o in orders]
    assert keys == sorted(keys)
    assert all(k[0] < k[-1] for k in keys)
    assert phpc_decide(g).ordering == orders[0]


def test_enumeration_is_complete_up_to_reversal():
    from itertools import permutations

    for g in connected_planar(4, 5)[::3]:
        vs = g.sorted_vertices
        expected = {
            p for p in permutations(vs)
            if vs.index(p[0]) < vs.index(p[-1]) and nx.check_planarity(to_nx(g.with_edges(path_edges(p))))[0]
        }
        assert set(iter_phpc_orderings(g)) == expected


def test_parallel_search_matches_serial():
    for g in list(connected_planar(7, 7))[::50] + [octahedron_kleetope()]:
        assert phpc_decide(g, workers=3) == phpc_decide(g, workers=1)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_monotone_under_edge_removal(data):
    graphs = connected_planar(4, 6)
    g = graphs[data.draw(st.integers(0, len(graphs) - 1))]
    edges = sorted(g.edges)
    keep = data.draw(st.lists(st.sampled_from(edges), unique=True))
    sub = Graph(g.vertices, frozenset(keep))
    if phpc_decide(g) is not None:
        assert phpc_decide(sub) is not None
