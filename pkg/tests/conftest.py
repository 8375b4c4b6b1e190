import networkx as nx
import pytest

from planar_interval.corpus import icosahedron, octahedron, stack5
from planar_interval.graph import Graph, planar_embed, triangulate_induced


def graph_from_nx(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def triangulation_of(g: Graph):
    return triangulate_induced(planar_embed(g), range(g.n))


def random_planar_graph(seed: int, n: int, keep: float = 0.6) -> Graph:
    """Random subgraph of a random triangulation, so it is planar but not maximal."""
    import random

    from planar_interval.generate import GeneratorConfig, gen_triangulation

    rnd = random.Random(seed)
    t = gen_triangulation(GeneratorConfig(seed, max(n, 4), n))
    edges = [e for e in t.edges() if rnd.random() < keep]
    return Graph.from_edges(t.n, edges)


@pytest.fixture
def oct_t():
    return triangulation_of(octahedron())


@pytest.fixture
def ico_t():
    return triangulation_of(icosahedron())


@pytest.fixture
def stack5_t():
    return triangulation_of(stack5())
