import networkx as nx
import pytest
from conftest import triangulation_of

from planar_interval.corpus import complete, icosahedron
from planar_interval.errors import MinimalityViolation, NoSeparator
from planar_interval.generate import GeneratorConfig, gen_triangulation
from planar_interval.graph import is_four_connected
from planar_interval.separators import TriangleRef, find_nonempty_triangles, peeling_schedule, select_minimal, split


def naive_schedule(t):
    out = []
    current = t
    while current.n > 3:
        res = split(current, select_minimal(find_nonempty_triangles(current)))
        out.append(res)
        current = res.g_out
    return out


def test_triangle_has_none():
    assert find_nonempty_triangles(triangulation_of(complete(3))) == []


def test_k4_only_outer():
    t = triangulation_of(complete(4))
    (ref,) = find_nonempty_triangles(t)
    assert set(ref.vertices) == set(t.outer)
    assert len(ref.interior) == 1


def test_stack5(stack5_t):
    refs = {r.vertices: r.interior for r in find_nonempty_triangles(stack5_t)}
    assert refs == {(0, 1, 3): frozenset({2, 4}), (0, 1, 2): frozenset({4})}
    best = select_minimal(find_nonempty_triangles(stack5_t))
    assert best.vertices == (0, 1, 2)
    res = split(stack5_t, best)
    assert sorted(res.g_out.vertices) == [0, 1, 2, 3] and len(res.g_out.edges()) == 6
    assert sorted(res.g_in.vertices) == [0, 1, 2, 4] and len(res.g_in.edges()) == 6
    assert set(res.g_in.outer) == {0, 1, 2}


def test_select_minimal_ties_and_errors():
    a = TriangleRef((3, 4, 5), frozenset({9}))
    b = TriangleRef((0, 1, 2), frozenset({8}))
    assert select_minimal([a]) is a
    assert select_minimal([a, b]) is b
    with pytest.raises(NoSeparator):
        select_minimal([])


def test_k4_split_outer():
    t = triangulation_of(complete(4))
    res = split(t, find_nonempty_triangles(t)[0])
    assert res.g_out.n == 3 and res.g_in.n == 4


def test_icosahedron_only_outer(ico_t):
    refs = find_nonempty_triangles(ico_t)
    assert len(refs) == 1 and set(refs[0].vertices) == set(ico_t.outer)


def test_non_minimal_split_rejected(stack5_t):
    outer = next(r for r in find_nonempty_triangles(stack5_t) if len(r.interior) == 2)
    with pytest.raises(MinimalityViolation):
        split(stack5_t, outer)


def test_interior_matches_connectivity_oracle():
    for seed in range(20):
        t = gen_triangulation(GeneratorConfig(seed, 25, 25))
        h = t.embedding.to_networkx()
        outer = set(t.outer)
        for ref in find_nonempty_triangles(t):
            if set(ref.vertices) == outer:
                continue
            rest = h.subgraph(v for v in h if v not in ref.vertices)
            outside = nx.node_connected_component(rest, next(v for v in outer if v not in ref.vertices))
            assert ref.interior == frozenset(rest) - outside


@pytest.mark.parametrize("seed", range(30))
def test_schedule_matches_naive_reselection(seed):
    n = 8 + seed
    t = gen_triangulation(GeneratorConfig(seed, n, seed % 3 * n))
    fast, slow = peeling_schedule(t), naive_schedule(t)
    assert [r.delta for r in fast] == [r.delta for r in slow]


@pytest.mark.parametrize("seed", range(10))
def test_schedule_properties(seed):
    t = gen_triangulation(GeneratorConfig(seed, 40, 40))
    sched = peeling_schedule(t)
    current = t
    owned = []
    for res in sched:
        assert res.g_out.n + res.g_in.n == current.n + 3
        assert is_four_connected(res.g_in)
        for a, b in ((0, 1), (0, 2), (1, 2)):
            u, v = res.delta.vertices[a], res.delta.vertices[b]
            assert res.g_out.has_edge(u, v) and res.g_in.has_edge(u, v)
        owned += list(res.delta.interior)
        current = res.g_out
    assert current.n == 3
    assert sorted(owned + list(current.vertices)) == sorted(t.vertices)


def test_schedule_json(stack5_t):
    doc = peeling_schedule(stack5_t)[0].to_json()
    assert doc["delta"] == [0, 1, 2] and doc["interior"] == [4]
    assert len(doc["piece_edges"]) == 6
