import itertools
import time
from types import SimpleNamespace

import networkx as nx
import pytest
from conftest import triangulation_of
from oracles import inner_decompositions

from planar_interval.corpus import complete, stack5
from planar_interval.decomposition import (
    _key,
    _ordering_search,
    _path_search,
    decompose_any,
    decompose_inner,
    extend_full,
    opposing_vertices,
    verify_full,
    verify_inner,
)
from planar_interval.errors import NotFourConnected, SearchExhausted, ValidationError
from planar_interval.generate import GeneratorConfig, gen_triangulation
from planar_interval.graph import PlanarEmbedding, Triangulation, is_four_connected
from planar_interval.separators import peeling_schedule


def labellings(t):
    return list(itertools.permutations(t.outer))


def with_outer_face(t, face):
    """Same triangulation drawn with ``face`` as the outer face."""
    a, b, _ = face
    return Triangulation(PlanarEmbedding(t.embedding.rotation, (a, b)), t.original_vertices)


def small_four_connected():
    """4-connected triangulations on 6 and 7 vertices, one per isomorphism class."""
    found = []
    for n in (6, 7):
        for seed in range(300):
            t = gen_triangulation(GeneratorConfig(seed, n, 4 * n))
            if not is_four_connected(t):
                continue
            h = t.embedding.to_networkx()
            if not any(nx.is_isomorphic(h, k.embedding.to_networkx()) for k in found):
                found.append(t)
    return found


def test_k4_forced_form():
    t = triangulation_of(complete(4))
    x, y, z = t.outer
    (u,) = set(t.vertices) - {x, y, z}
    d = decompose_inner(t, (x, y, z))
    assert d.opposing.u_x == d.opposing.u_y == d.opposing.u_z == u
    assert d.f_x_path == (x, u)
    assert d.f_y_edges == {_key(y, u)}
    assert d.f_z_edges == {_key(z, u)}
    assert d.k4_flag
    assert verify_inner(t, (x, y, z), d).ok


def test_k4_extend_full():
    t = triangulation_of(complete(4))
    x, y, z = t.outer
    (u,) = set(t.vertices) - {x, y, z}
    full = extend_full(t, (x, y, z), decompose_inner(t, (x, y, z)))
    assert full.path == (y, x, u)
    assert full.forest_a_edges == {_key(y, u), _key(y, z)}
    assert full.forest_b_edges == {_key(z, u), _key(x, z)}


def test_opposing_vertices_errors(stack5_t):
    with pytest.raises(NotFourConnected):
        opposing_vertices(stack5_t, stack5_t.outer)
    with pytest.raises(ValidationError):
        opposing_vertices(stack5_t, (0, 1, 2))


def test_octahedron_against_exhaustive_labelling(oct_t):
    for outer in labellings(oct_t):
        oracle = inner_decompositions(oct_t, outer)
        assert oracle, "exhaustive search found no decomposition"
        d = decompose_inner(oct_t, outer)
        assert verify_inner(oct_t, outer, d).ok
        assert len(d.f_x_edges) == len(d.f_y_edges) == len(d.f_z_edges) == 3
        got = {"x": set(d.f_x_edges), "y": set(d.f_y_edges), "z": set(d.f_z_edges)}
        assert any({c: set(p[c]) for c in "xyz"} == got for p in oracle)


def test_moving_path_edge_breaks_path_check(oct_t):
    outer = oct_t.outer
    d = decompose_inner(oct_t, outer)
    last = _key(d.f_x_path[-2], d.f_x_path[-1])
    broken = SimpleNamespace(
        opposing=d.opposing,
        f_x_path=d.f_x_path[:-1],
        f_x_edges=d.f_x_edges - {last},
        f_y_edges=d.f_y_edges | {last},
        f_z_edges=d.f_z_edges,
    )
    report = verify_inner(oct_t, outer, broken)
    assert not report.checks["F_x Hamiltonian path of G-{y,z} from x to u_x"]
    assert not report.ok


def test_moving_tree_edge_breaks_forest_checks(ico_t):
    outer = ico_t.outer
    d = decompose_inner(ico_t, outer)
    e = sorted(d.f_y_edges - {_key(v, outer[1]) for v in ico_t.vertices})[0]
    broken = SimpleNamespace(
        opposing=d.opposing, f_x_path=d.f_x_path, f_x_edges=d.f_x_edges,
        f_y_edges=d.f_y_edges - {e}, f_z_edges=d.f_z_edges | {e},
    )
    report = verify_inner(ico_t, outer, broken)
    assert not report.checks["F_y spanning tree of G-{x,z}"]
    assert not report.checks["cardinalities n-3"]


def test_icosahedron_all_labellings(ico_t):
    for outer in labellings(ico_t):
        t0 = time.perf_counter()
        d = decompose_inner(ico_t, outer)
        assert time.perf_counter() - t0 < 5
        rep = verify_inner(ico_t, outer, d)
        assert rep.ok, rep.failures()
        assert _key(outer[0], d.opposing.u_y) in d.f_x_edges
        assert _key(outer[2], d.opposing.u_y) in d.f_z_edges
        full = extend_full(ico_t, outer, d)
        assert verify_full(ico_t, outer, full) == []


def test_small_four_connected_every_face_and_labelling():
    found = small_four_connected()
    assert sorted(t.n for t in found) == [6, 7]
    for t in found:
        for face in t.inner_faces() + [t.outer]:
            tf = with_outer_face(t, face)
            for outer in labellings(tf):
                d = decompose_inner(tf, outer)
                assert verify_inner(tf, outer, d).ok


def test_path_search_alone_is_complete_on_pieces():
    # the fallback must succeed even where the ordering search would have
    for seed in range(6):
        t = gen_triangulation(GeneratorConfig(seed, 30, 90))
        for piece in peeling_schedule(t):
            g = piece.g_in
            if g.n < 6:
                continue
            outer = g.outer
            _, d = _path_search(g, [(outer, opposing_vertices(g, outer))])
            assert verify_inner(g, outer, d).ok


def test_ordering_search_can_fail_where_path_search_succeeds():
    misses = 0
    for seed in range(10):
        for piece in peeling_schedule(gen_triangulation(GeneratorConfig(seed, 40, 120))):
            g = piece.g_in
            if g.n < 8:
                continue
            for outer in labellings(g):
                opp = opposing_vertices(g, outer)
                if _ordering_search(g, outer, opp) is None:
                    misses += 1
                    assert verify_inner(g, outer, _path_search(g, [(outer, opp)])[1]).ok
    assert misses > 0


def test_node_limit_surfaces_search_exhausted():
    for seed in range(20):
        for piece in peeling_schedule(gen_triangulation(GeneratorConfig(seed, 40, 120))):
            g = piece.g_in
            if g.n < 10:
                continue
            for outer in labellings(g):
                opp = opposing_vertices(g, outer)
                if _ordering_search(g, outer, opp) is None:
                    with pytest.raises(SearchExhausted):
                        _path_search(g, [(outer, opp)], node_limit=1)
                    return
    pytest.skip("no labelling without a chained ordering found")


def test_decompose_any_returns_a_requested_labelling(oct_t):
    x, y, z = oct_t.outer
    outer, d = decompose_any(oct_t, [(z, y, x), (x, y, z)])
    assert outer in {(z, y, x), (x, y, z)}
    assert verify_inner(oct_t, outer, d).ok


def test_json_shape(oct_t):
    doc = decompose_inner(oct_t, oct_t.outer).to_json()
    assert set(doc) >= {"F_x", "F_y", "F_z", "path_order"}
    assert len(doc["F_x"]) == len(doc["F_y"]) == len(doc["F_z"]) == 3
    assert doc["path_order"][0] == oct_t.outer[0]


def test_stack5_is_rejected():
    t = triangulation_of(stack5())
    with pytest.raises(NotFourConnected):
        decompose_inner(t, t.outer)
