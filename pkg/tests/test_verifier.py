import json
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from apexrep import _kernels, verifier
from apexrep.errors import ContractViolationError, InvalidInputError
from apexrep.frontline import synthesize as draw
from apexrep.graph import build_apex_gadget
from apexrep.pure2dir import Arrangement, Orientation, Segment, synthesize
from apexrep.verifier import (
    extract_hamiltonian_order,
    intersection_graph,
    one_string_check,
    parallel_contacts,
    roundtrip_check,
    scan,
    verify_reduction,
)

from instances import complete, connected_planar, octahedron_kleetope, path

H, V = Orientation.H, Orientation.V


def arrangement(*segs, n=0, k=3):
    return Arrangement(n, k, tuple(segs))


def seg(owner, o, fixed, lo, hi):
    return Segment(owner, o, F(fixed), F(lo), F(hi))


def naive_contacts(segs):
    crossing, parallel = [], []
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            s, t = segs[i], segs[j]
            if s.orientation is not t.orientation:
                h, v = (s, t) if s.orientation is H else (t, s)
                if h.lo <= v.fixed <= h.hi and v.lo <= h.fixed <= v.hi:
                    crossing.append((i, j))
            elif s.fixed == t.fixed and max(s.lo, t.lo) <= min(s.hi, t.hi):
                parallel.append((i, j))
    return tuple(crossing), tuple(parallel)


def test_crossing_pair_is_an_edge():
    arr = arrangement(seg("p", H, 0, -1, 1), seg("q", V, 0, -1, 1))
    assert intersection_graph(arr).edges == {("p", "q")}
    assert one_string_check(arr)


def test_endpoint_touch_counts():
    arr = arrangement(seg("p", H, 2, -1, 1), seg("q", V, F(1, 3), 2, 5))
    assert intersection_graph(arr).edges == {("p", "q")}


def test_parallel_contacts_are_reported_not_edges():
    arr = arrangement(seg("p", H, 0, 0, 2), seg("q", H, 0, 1, 3), seg("r", V, 5, 0, 1))
    assert intersection_graph(arr).edges == set()
    assert parallel_contacts(arr) == [("p", "q")]
    assert not one_string_check(arr)


def test_identical_segments_fail_one_string():
    assert not one_string_check(arrangement(seg("p", V, 1, 0, 1), seg("q", V, 1, 0, 1)))


def test_collinear_touch_is_a_single_point():
    arr = arrangement(seg("p", H, 0, 0, 1), seg("q", H, 0, 1, 2))
    assert one_string_check(arr)
    assert parallel_contacts(arr) == [("p", "q")]


def test_two_points_between_one_pair_fail_one_string():
    arr = arrangement(seg("p", H, 0, 0, 3), seg("q", V, 1, -1, 1), seg("q", V, 2, -1, 1))
    assert not one_string_check(arr)


def _segments():
    coord = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.builds(
        lambda o, f, a, b, i: Segment(f"s{i}", o, f, min(a, b), max(a, b)),
        st.sampled_from([H, V]), coord, coord, coord, st.integers(0, 5),
    )


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.lists(_segments(), max_size=12))
def test_scan_matches_naive(backend, segs):
    hits = scan(segs)
    crossing, parallel = naive_contacts(segs)
    assert hits.crossing == crossing and hits.parallel == parallel


def test_scan_falls_back_for_huge_coordinates(monkeypatch):
    calls = []
    real = _kernels.python.hv_contacts
    monkeypatch.setattr(_kernels.python, "hv_contacts", lambda *a: calls.append(1) or real(*a))
    big = 2**70
    segs = [seg("p", H, big, -big, big), seg("q", V, 0, 0, big + 1)]
    assert scan(segs).crossing == ((0, 1),)
    assert calls


def test_scan_on_pipeline_arrangements(backend):
    for g in connected_planar(4, 6)[::11]:
        d, p = draw(g)
        arr = synthesize(d, p, build_apex_gadget(g, 8))
        hits = scan(arr.segments)
        assert (hits.crossing, hits.parallel) == naive_contacts(arr.segments)


def test_extract_sorts_by_height():
    arr = arrangement(
        seg("a", V, 0, 0, 10),
        seg("y3", H, 3, -1, 1),
        seg("y1", H, 1, -1, 1),
        seg("y2", H, 2, -1, 1),
    )
    assert extract_hamiltonian_order(arr, "a", {"y1", "y2", "y3"}) == ("y1", "y2", "y3")


@pytest.mark.parametrize(
    "segs",
    [
        [seg("a", V, 0, 0, 10), seg("y1", H, 1, 1, 2)],
        [seg("a", V, 0, 0, 10), seg("y1", H, 1, -1, 1), seg("y1", H, 2, -1, 1)],
        [seg("a", H, 0, 0, 10), seg("y1", H, 1, -1, 1)],
        [seg("a", V, 0, 0, 10), seg("y1", V, 0, 5, 12)],
    ],
)
def test_extract_contract_violations(segs):
    with pytest.raises(ContractViolationError):
        extract_hamiltonian_order(arrangement(*segs), "a", {"y1"})


def test_roundtrip_positive():
    g = complete(4)
    d, p = draw(g)
    gad = build_apex_gadget(g, 6)
    assert roundtrip_check(g, synthesize(d, p, gad), gad)


def test_roundtrip_negative_control():
    g = octahedron_kleetope()
    gad = build_apex_gadget(g, 6)
    order = sorted(g.vertices)
    segs = [seg(gad.apex, V, 0, F(1, 2), len(order) + F(1, 2))]
    segs += [seg(v, H, i, -1, 1) for i, v in enumerate(order, 1)]
    assert not roundtrip_check(g, arrangement(*segs, n=len(order)), gad)


def test_verify_path():
    report = verify_reduction(path(4), 6)
    assert report.passed and report.graph_equality and report.roundtrip_planar
    assert report.arrangement_props == {"census_ok": True, "pure2dir_legal": True, "one_point_per_pair": True}
    assert report.gadget_props == {"bipartite": True, "girth_ok": True, "apex_ok": True}


def test_verify_k4_girth_10():
    report = verify_reduction(complete(4), 10)
    assert report.k == 7 and report.passed


def test_verify_no_instance():
    report = verify_reduction(octahedron_kleetope(), 6)
    assert not report.phpc
    assert report.graph_equality is None and report.arrangement_props is None
    assert report.passed
    assert report.notes


def test_verify_rejects_non_planar():
    with pytest.raises(InvalidInputError):
        verify_reduction(complete(5), 6)


def test_verify_reports_tampering(monkeypatch):
    real = verifier.synthesize_arrangement

    def shrunk(d, p, gad):
        arr = real(d, p, gad)
        segs = list(arr.segments)
        v = segs[1]
        segs[1] = replace(v, lo=F(-1, 20), hi=F(1, 20))  # original no longer reaches its edges
        return replace(arr, segments=tuple(segs))

    monkeypatch.setattr(verifier, "synthesize_arrangement", shrunk)
    report = verify_reduction(complete(4), 6)
    assert not report.passed and report.graph_equality is False
    assert any(check == "graph_equality" for check, _ in report.failures)


def test_report_json_is_sorted_and_stable():
    a = verify_reduction(complete(4), 8).to_json()
    b = verify_reduction(complete(4), 8).to_json()
    assert a == b
    data = json.loads(a)
    assert list(data) == sorted(data)
