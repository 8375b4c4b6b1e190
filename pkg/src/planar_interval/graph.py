"""Simple graphs, plane embeddings as rotation systems, and triangulation.

Rotation convention: ``rotation[v]`` lists the neighbours of ``v`` in
counter-clockwise order.  Walking a face, the half-edge after ``(u, v)`` is
``(v, w)`` where ``w`` follows ``u`` in ``rotation[v]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from .errors import NonPlanar, SelfLoop, ValidationError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system over arbitrary integer labels.

    ``outer`` is a half-edge lying on the outer face (``None`` when the graph
    has no edges).
    """

    rotation: dict[int, tuple[int, ...]]
    outer: tuple[int, int] | None = None
    _succ: dict[int, dict[int, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        succ = {}
        for v, rot in self.rotation.items():
            k = len(rot)
            succ[v] = {rot[i]: rot[(i + 1) % k] for i in range(k)}
        object.__setattr__(self, "_succ", succ)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotation)

    @property
    def n(self) -> int:
        return len(self.rotation)

    def neighbors(self, v: int):
        return self._succ[v].keys()

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._succ[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in self.rotation for v in self.rotation[u] if u < v)

    def next_half_edge(self, u: int, v: int) -> tuple[int, int]:
        return v, self._succ[v][u]

    def face_of(self, u: int, v: int) -> tuple[int, ...]:
        """Vertex sequence of the face walk starting with half-edge (u, v)."""
        walk = []
        a, b = u, v
        while True:
            walk.append(a)
            a, b = self.next_half_edge(a, b)
            if (a, b) == (u, v):
                return tuple(walk)

    def face_walks(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        """All faces as (first half-edge, vertex walk), in half-edge order."""
        seen = set()
        out = []
        for u in sorted(self.rotation):
            for v in sorted(self.rotation[u]):
                if (u, v) in seen:
                    continue
                start = (u, v)
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = self.next_half_edge(a, b)
                if (a, b) != start:
                    raise ValidationError(f"face walk from {start} does not close")
                out.append((start, tuple(walk)))
        return out

    @property
    def outer_face(self) -> int | None:
        if self.outer is None:
            return None
        u, v = self.outer
        for i, (_, walk) in enumerate(self.face_walks()):
            k = len(walk)
            if any(walk[j] == u and walk[(j + 1) % k] == v for j in range(k)):
                return i
        raise ValidationError(f"outer half-edge {self.outer} is not on any face")

    def outer_vertices(self) -> tuple[int, ...]:
        return () if self.outer is None else self.face_of(*self.outer)

    def restrict(self, keep: Iterable[int], outer: tuple[int, int] | None = None) -> "PlanarEmbedding":
        """Embedding induced on ``keep``; removing vertices merges their faces."""
        keep = set(keep)
        rot = {v: tuple(w for w in self.rotation[v] if w in keep) for v in sorted(keep)}
        if outer is None and self.outer is not None and set(self.outer) <= keep:
            outer = self.outer
        return PlanarEmbedding(rot, outer)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self.rotation))
        g.add_edges_from(self.edges())
        return g


def faces(e: PlanarEmbedding) -> list[tuple[int, ...]]:
    """Face walks of ``e``; face ids are list indices."""
    return [walk for _, walk in e.face_walks()]


def _pick_outer(e: PlanarEmbedding) -> tuple[int, int] | None:
    walks = e.face_walks()
    if not walks:
        return None
    # longest face; ties go to the lexicographically smallest sorted vertex set
    best = min(walks, key=lambda fw: (-len(fw[1]), sorted(set(fw[1]))))
    return best[0]


def planar_embed(g: Graph) -> PlanarEmbedding:
    ok, emb = nx.check_planarity(g.to_networkx(), counterexample=False)
    if not ok:
        witness = None
        try:
            _, kur = nx.check_planarity(g.to_networkx(), counterexample=True)
            witness = sorted(tuple(sorted(e)) for e in kur.edges())
        except nx.NetworkXException:
            pass
        raise NonPlanar(witness=witness)
    rotation = {v: tuple(reversed(list(emb.neighbors_cw_order(v)))) for v in range(g.n)}
    e = PlanarEmbedding(rotation)
    return PlanarEmbedding(rotation, _pick_outer(e))


@dataclass(frozen=True)
class Triangulation:
    embedding: PlanarEmbedding
    original_vertices: frozenset[int]

    @property
    def vertices(self) -> list[int]:
        return self.embedding.vertices

    @property
    def n(self) -> int:
        return self.embedding.n

    def neighbors(self, v: int):
        return self.embedding.neighbors(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.embedding.has_edge(u, v)

    def edges(self) -> list[tuple[int, int]]:
        return self.embedding.edges()

    def faces(self) -> list[tuple[int, ...]]:
        return faces(self.embedding)

    @property
    def outer(self) -> tuple[int, int, int]:
        return self.embedding.outer_vertices()

    def inner_faces(self) -> list[tuple[int, ...]]:
        walks = self.embedding.face_walks()
        k = self.embedding.outer_face
        return [w for i, (_, w) in enumerate(walks) if i != k]

    def validate(self) -> None:
        if self.n < 3:
            raise ValidationError("a triangulation needs at least 3 vertices")
        for walk in self.faces():
            if len(walk) != 3 or len(set(walk)) != 3:
                raise ValidationError(f"face {walk} is not a triangle")
        v, e, f = self.n, len(self.edges()), len(self.faces())
        if v - e + f != 2:
            raise ValidationError(f"Euler's relation fails: {v} - {e} + {f} != 2")


def _augment_connected(g: Graph) -> Graph:
    """Join components through one new hub vertex, then pad to 3 vertices."""
    edges = g.edges()
    n = g.n
    comps = g.components()
    if len(comps) > 1:
        hub = n
        n += 1
        edges += [(c[0], hub) for c in comps]
    while n < 3:
        edges += [(v, n) for v in range(n)]
        n += 1
    return Graph.from_edges(n, edges)


def _stellate(rotation: dict[int, list[int]], walk: tuple[int, ...], w: int) -> None:
    """Insert new vertex ``w`` in the face ``walk``, joined once to each vertex.

    A vertex repeated on the walk is joined at its first corner only; the
    leftover non-triangular faces are handled by later stellations.
    """
    chosen, seen = [], set()
    for i, c in enumerate(walk):
        if c not in seen:
            seen.add(c)
            chosen.append(i)
    for i in chosen:
        rot = rotation[walk[i]]
        rot.insert(rot.index(walk[i - 1]) + 1, w)
    # counter-clockwise around w is the reverse of the walk direction
    rotation[w] = [walk[i] for i in reversed(chosen)]


def _walk(rotation: dict[int, list[int]], u: int, v: int) -> tuple[int, ...]:
    walk = []
    a, b = u, v
    while True:
        walk.append(a)
        rot = rotation[b]
        a, b = b, rot[(rot.index(a) + 1) % len(rot)]
        if (a, b) == (u, v):
            return tuple(walk)


def triangulate_induced(e: PlanarEmbedding, original: Iterable[int] | None = None) -> Triangulation:
    """Stellate every non-triangular face until all faces are triangles.

    Only new vertices are added, so the original vertices still induce the
    input graph.  Disconnected or tiny inputs are first augmented with new
    vertices and re-embedded.
    """
    labels = e.vertices
    if original is None:
        original = labels
    original = frozenset(original)
    if labels != list(range(len(labels))):
        raise ValidationError("triangulate_induced expects vertex ids 0..n-1")
    g = Graph.from_edges(len(labels), e.edges())
    if g.n < 3 or len(g.components()) > 1:
        e = planar_embed(_augment_connected(g))
    rotation = {v: list(r) for v, r in e.rotation.items()}
    outer = e.outer
    next_id = len(rotation)
    queue = deque(walk for _, walk in e.face_walks())
    rounds = 0
    while queue:
        walk = queue.popleft()
        if len(walk) == 3 and len(set(walk)) == 3:
            continue
        rounds += 1
        if rounds > 4 * (len(rotation) + 16) ** 2:
            raise RuntimeError("stellation did not terminate")
        w = next_id
        next_id += 1
        _stellate(rotation, walk, w)
        for c in rotation[w]:
            queue.append(_walk(rotation, w, c))
    t = Triangulation(PlanarEmbedding({v: tuple(r) for v, r in rotation.items()}, outer), original)
    t.validate()
    return t


def is_four_connected(g) -> bool:
    """True iff the triangulation graph ``g`` has no separating triangle.

    For a maximal planar graph with n >= 5 this is exactly 4-connectivity;
    K4 counts as 4-connected.  ``g`` needs ``vertices`` and ``neighbors``.
    """
    verts = list(g.vertices)
    if len(verts) < 4:
        raise ValidationError("4-connectivity is only defined here for n >= 4")
    nbrs = {v: set(g.neighbors(v)) for v in verts}
    for x in verts:
        for y in nbrs[x]:
            if y <= x:
                continue
            for z in nbrs[x] & nbrs[y]:
                if z <= y:
                    continue
                if _separates(nbrs, verts, {x, y, z}):
                    return False
    return True


def _separates(nbrs: dict[int, set[int]], verts: list[int], cut: set[int]) -> bool:
    rest = [v for v in verts if v not in cut]
    if not rest:
        return False
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in nbrs[v]:
            if w not in cut and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) < len(rest)
