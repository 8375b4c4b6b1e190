"""Named test graphs and the seeded generated corpus."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .generate import GeneratorConfig, gen_triangulation
from .graph import Graph


def _from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def stack5() -> Graph:
    """K4 with a fifth vertex placed in one face."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)])


def octahedron() -> Graph:
    return _from_nx(nx.octahedral_graph())


def icosahedron() -> Graph:
    return _from_nx(nx.icosahedral_graph())


def named_graphs() -> dict[str, Graph]:
    return {
        "K1": complete(1),
        "K2": complete(2),
        "K3": complete(3),
        "K4": complete(4),
        "stack5": stack5(),
        "octahedron": octahedron(),
        "icosahedron": icosahedron(),
    }


@dataclass(frozen=True)
class GeneratedCase:
    name: str
    config: GeneratorConfig

    def graph(self) -> Graph:
        t = gen_triangulation(self.config)
        return Graph.from_edges(t.n, t.edges())


def generated_cases(count: int = 200, max_n: int = 60) -> list[GeneratedCase]:
    """``count`` configurations cycling flips through 0, n and 3n over n in ``4..max_n``."""
    out = []
    span = max_n - 3
    for i in range(count):
        n = 4 + (7 * i) % span
        # shift the flip pattern each lap so every n meets every flip level
        flips = (0, n, 3 * n)[(i + i // span) % 3]
        out.append(GeneratedCase(f"gen-s{i}-n{n}-f{flips}", GeneratorConfig(seed=i, n=n, flips=flips)))
    return out
