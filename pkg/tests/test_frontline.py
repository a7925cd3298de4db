import json
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apexrep import frontline
from apexrep.errors import InternalConsistencyError, InvalidInputError
from apexrep.frontline import (
    LEFT_ARC,
    RIGHT_ARC,
    FrontLineDrawing,
    Placement,
    Relation,
    Side,
    above,
    chord_leq,
    chords_cross,
    containment,
    crossing_pairs,
    drawing_from_dict,
    drawing_to_json,
    ranks,
    synthesize,
    validate,
)
from apexrep.graph import Graph, canonical_edge
from apexrep.planarity import phpc_decide

import oracles
from instances import complete, connected_planar, figure_2a, path

A, B, L, R = Side.ABOVE, Side.BELOW, Side.LEFT, Side.RIGHT


def e(a, b):
    return canonical_edge(f"v{a}", f"v{b}")


def polyline_pair_crossings(n, c1, c2):
    chords = {"x": c1, "y": c2}
    ends = {"x": (c1[1], c1[2]), "y": (c2[1], c2[2])}
    return oracles.crossing_count(n, chords, ends, "x", "y")


# values frozen from the polyline oracle
@pytest.mark.parametrize(
    "c1, c2, crosses",
    [
        (("A", 3, 5), ("A", 2, 4), False),
        (("A", 2, 5), ("A", 3, 4), True),
        (("L", 1, 3), ("L", 3, 5), False),
    ],
)
def test_pairwise_examples(c1, c2, crosses):
    side = {"A": A, "L": L}
    assert chords_cross((side[c1[0]], *c1[1:]), (side[c2[0]], *c2[1:])) is crosses
    assert (polyline_pair_crossings(6, c1, c2) > 0) is crosses


def _chord():
    kinds = st.sampled_from("LRAB")
    return st.tuples(kinds, st.integers(1, 7), st.integers(1, 7)).filter(lambda c: c[1] != c[2]).map(
        lambda c: (c[0], *sorted(c[1:])) if c[0] in "LR" else c
    )


SIDES = {"L": L, "R": R, "A": A, "B": B}


@given(_chord(), _chord())
def test_rules_match_laminar_arcs(c1, c2):
    if {c1[1], c1[2]} == {c2[1], c2[2]}:
        return  # parallel edges do not occur in simple graphs
    x, y = (SIDES[c1[0]], c1[1], c1[2]), (SIDES[c2[0]], c2[1], c2[2])
    assert chords_cross(x, y) == chords_cross(y, x)
    assert chords_cross(x, y) == oracles.circle_cross(c1, c2, 7)
    if not chords_cross(x, y):
        assert chord_leq(x, y) == (oracles.circle_arc(c1[0], 7, c1[1], c1[2]) <= oracles.circle_arc(c2[0], 7, c2[1], c2[2]))


def test_path_all_left():
    g = path(4)
    d = FrontLineDrawing(g.sorted_vertices, {x: LEFT_ARC for x in g.edges})
    assert validate(d, g)
    assert set(ranks(d).rank.values()) == {1}
    found, poset = synthesize(g)
    assert all(found.assignment[x] == LEFT_ARC for x in g.edges)
    assert set(poset.rank.values()) == {1}


def test_disjoint_left_arcs_are_an_antichain():
    g = Graph.from_edges([("v1", "v3"), ("v4", "v6"), ("v7", "v9")], [f"v{i}" for i in range(1, 10)])
    d = FrontLineDrawing(tuple(f"v{i}" for i in range(1, 10)), {x: LEFT_ARC for x in g.edges})
    assert validate(d, g)
    assert set(ranks(d).rank.values()) == {1}


def test_opposite_sides_incomparable():
    assert not chord_leq((L, 1, 2), (R, 1, 2))
    assert not chord_leq((R, 1, 2), (L, 1, 2))


def test_figure_drawing_ranks():
    g, d = figure_2a()
    assert validate(d, g)
    assert len([x for x in d.edges if d.assignment[x].side.crossover]) == 2
    # frozen from an independent evaluation of the longest chains
    expected = {
        e(1, 2): 1, e(2, 3): 1, e(1, 3): 2, e(6, 8): 1, e(5, 8): 2,
        e(2, 5): 1, e(2, 6): 2, e(2, 7): 3, e(2, 4): 3, e(5, 7): 4,
    }
    assert ranks(d).rank == expected
    depths = oracles.circle_depths({x: (d.chord(x)[0].value, *d.chord(x)[1:]) for x in d.edges}, 8)
    assert depths == expected


def test_figure_graph_synthesizes():
    g, _ = figure_2a()
    found = synthesize(g)
    assert found is not None and validate(found[0], g)


def test_synthesize_rejects_non_planar():
    with pytest.raises(InvalidInputError):
        synthesize(complete(5))


def test_synthesize_no_instance():
    from instances import octahedron_kleetope

    assert synthesize(octahedron_kleetope()) is None


def test_validate_incomplete_assignment():
    g = path(4)
    d = FrontLineDrawing(g.sorted_vertices, {e(1, 2): LEFT_ARC})
    with pytest.raises(InvalidInputError):
        validate(d, g)


def test_validate_wrong_attach_vertices():
    g = path(3)
    d = FrontLineDrawing(g.sorted_vertices, {e(1, 2): LEFT_ARC, e(2, 3): above("v1", "v3")})
    with pytest.raises(InvalidInputError):
        validate(d, g)


def test_placement_checks_attach_fields():
    with pytest.raises(InvalidInputError):
        Placement(A, "v1")
    with pytest.raises(InvalidInputError):
        Placement(L, "v1", "v2")


def test_crossing_drawing_rejected():
    g = Graph.from_edges([("v1", "v3"), ("v2", "v4")])
    d = FrontLineDrawing(("v1", "v2", "v3", "v4"), {e(1, 3): LEFT_ARC, e(2, 4): LEFT_ARC})
    assert not validate(d, g)
    assert crossing_pairs(d) == [(e(1, 3), e(2, 4))]
    with pytest.raises(InvalidInputError):
        ranks(d)
    with pytest.raises(InvalidInputError):
        containment(e(1, 3), e(2, 4), d)
    fixed = d.with_placement(e(2, 4), RIGHT_ARC)
    assert validate(fixed, g)
    assert containment(e(1, 3), e(2, 4), fixed) is Relation.INCOMPARABLE
    assert containment(e(1, 3), e(1, 3), fixed) is Relation.EQUAL


def test_rank_cycle_is_internal_error(monkeypatch):
    _, d = figure_2a()
    monkeypatch.setattr(frontline, "chord_leq", lambda c1, c2: True)
    with pytest.raises(InternalConsistencyError):
        ranks(d)


def test_synthesis_agrees_with_phpc():
    for g in connected_planar(4, 7):
        found = synthesize(g)
        cert = phpc_decide(g)
        assert (found is None) == (cert is None)
        if found is not None:
            assert validate(found[0], g)


def test_poset_axioms_and_chains():
    for g in connected_planar(2, 6):
        d, poset = synthesize(g)
        ch = d.chords
        leq = {(x, y): chord_leq(ch[x], ch[y]) for x in d.edges for y in d.edges}
        for x in d.edges:
            assert leq[x, x]
            assert poset.rank[x] == 1 + max((poset.rank[y] for y in poset.below[x]), default=0)
        for x, y in permutations(d.edges, 2):
            assert not (leq[x, y] and leq[y, x])
            assert (poset.relation(x, y) is Relation.LESS) == leq[x, y]
        for x, y, z in permutations(d.edges, 3):
            if leq[x, y] and leq[y, z]:
                assert leq[x, z]
        for side in (A, B):
            group = d.edges_on(side)
            for x, y in combinations(group, 2):
                assert leq[x, y] or leq[y, x]


def test_json_roundtrip():
    g, d = figure_2a()
    poset = ranks(d)
    text = drawing_to_json(d, poset)
    data = json.loads(text)
    assert data["ranks"]["v2 v7"] == 3
    back = drawing_from_dict(data)
    assert back.ordering == d.ordering and dict(back.assignment) == dict(d.assignment)
