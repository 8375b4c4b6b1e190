from fractions import Fraction

import pytest
from conftest import triangulation_of
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import pairwise_edges, sampled_depth

from planar_interval.builder import base_triangle, build
from planar_interval.corpus import complete
from planar_interval.errors import ValidationError
from planar_interval.representation import Interval, Representation, normalize
from planar_interval.verify import (
    broken_ends,
    cells,
    check_invariants,
    count_check,
    depth,
    displayed,
    intersection_edges,
    intersection_graph,
    verify,
    verify_graph,
)


def rep_of(d):
    return Representation({v: [Interval(*iv) for iv in ivs] for v, ivs in d.items()})


@pytest.fixture
def base():
    return base_triangle(0, 1, 2)[0]


def test_base_triangle_graph_and_depth(base):
    assert intersection_graph(base).edges() == [(0, 1), (0, 2), (1, 2)]
    assert depth(base) == 3
    (c,) = [c for c in cells(base) if len(c.cover) == 3 and not c.is_point]
    assert (c.lo, c.hi) == (2, 3)


def test_base_triangle_displayed(base):
    dv, de = displayed(base)
    assert set(dv) == {0, 1, 2}
    assert set(de) == {(0, 1), (1, 2)}


def test_base_triangle_broken_ends(base):
    assert sorted(broken_ends(base)) == [(0, 0), (1, 6), (1, 7), (2, 5)]


def test_disjoint_and_touching():
    assert intersection_edges(rep_of({0: [(0, 1)], 1: [(2, 3)]})) == set()
    touch = rep_of({0: [(0, 1)], 1: [(1, 2)]})
    assert intersection_edges(touch) == {(0, 1)}
    assert broken_ends(touch) == [(0, 0), (1, 2)]


def test_depth_small_cases():
    assert depth(rep_of({0: [(0, 1)]})) == 1
    assert depth(rep_of({0: [(0, 1), (2, 3)]})) == 1
    # overlapping pieces of one vertex still cover a point once
    assert depth(rep_of({0: [(0, 2), (1, 3)]})) == 1


def test_display_small_cases():
    dv, de = displayed(rep_of({0: [(0, 2)], 1: [(0, 2)]}))
    assert dv == {} and set(de) == {(0, 1)}
    dv, de = displayed(rep_of({0: [(0, 2)], 1: [(0, 2)], 2: [(0, 2)]}))
    assert dv == {} and de == {}


def test_single_vertex_broken_ends():
    assert broken_ends(rep_of({4: [(0, 1)]})) == [(4, 0), (4, 1)]


def test_count_check(base):
    assert count_check(base, 3)
    assert not count_check(base, 1)
    assert count_check(rep_of({0: [(0, 1), (Fraction(1, 2), 2)]}), 1)


def test_check_invariants_base(base):
    t = triangulation_of(complete(3))
    report = check_invariants(base, t)
    assert report.matches_target and report.i1_ok and report.i2_ok
    assert report.self_check(base)


def test_check_invariants_vertex_mismatch(base):
    t = triangulation_of(complete(4))
    with pytest.raises(ValidationError):
        check_invariants(base, t)


def test_deleting_a_vertex_reports_missing_edges():
    g = complete(4)
    rep = build(g)
    report = verify_graph(rep.restrict([0, 1, 2]), g)
    assert not report.matches_target
    assert (0, 3) in report.missing_edges


def test_report_json(base):
    doc = verify_graph(base, complete(3)).to_json()
    assert doc["depth"] == 3 and doc["matches_target"]
    assert [e[:2] for e in doc["displayed_edges"]] == [[0, 1], [1, 2]]
    assert doc["displayed_vertices"]["0"] == ["0", "1"]


def test_witnesses_recheck_pointwise():
    rep = build(complete(4))
    assert verify_graph(rep, complete(4)).self_check(rep)


interval = st.tuples(st.integers(0, 40), st.integers(0, 40)).filter(lambda p: p[0] != p[1]).map(sorted)
random_rep = st.lists(st.tuples(st.integers(0, 7), interval), min_size=1, max_size=20)


def to_rep(items):
    d = {}
    for v, (lo, hi) in items:
        d.setdefault(v, []).append(Interval(lo, hi))
    return Representation(d)


@settings(max_examples=300, deadline=None)
@given(random_rep)
def test_sweep_matches_pairwise_oracle(items):
    rep = to_rep(items)
    assert intersection_edges(rep) == pairwise_edges(rep)
    assert depth(rep) == sampled_depth(rep)
    assert verify(rep, rep.vertices, []).self_check(rep)


@settings(max_examples=200, deadline=None)
@given(random_rep)
def test_normalize_invariance(items):
    rep = to_rep(items)
    norm = normalize(rep)
    assert intersection_edges(norm) == intersection_edges(rep)
    assert depth(norm) == depth(rep)
    assert set(displayed(norm)[0]) == set(displayed(rep)[0])
    assert set(displayed(norm)[1]) == set(displayed(rep)[1])


@settings(max_examples=200, deadline=None)
@given(random_rep)
def test_depth_at_least_two_when_any_edge(items):
    rep = to_rep(items)
    if intersection_edges(rep):
        assert depth(rep) >= 2
