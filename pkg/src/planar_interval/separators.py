"""Non-empty triangles of a triangulation and the peeling schedule built from them."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import MinimalityViolation, NoSeparator, ValidationError
from .graph import PlanarEmbedding, Triangulation, is_four_connected


@dataclass(frozen=True)
class TriangleRef:
    vertices: tuple[int, int, int]
    interior: frozenset[int]

    def to_json(self) -> dict:
        return {"delta": list(self.vertices), "interior": sorted(self.interior)}


@dataclass(frozen=True)
class SplitResult:
    g_out: Triangulation
    g_in: Triangulation
    delta: TriangleRef

    def to_json(self) -> dict:
        out = self.delta.to_json()
        out["piece_edges"] = [list(e) for e in self.g_in.edges()]
        return out


def triangles(t) -> list[tuple[int, int, int]]:
    """All 3-cliques as sorted vertex triples."""
    out = []
    for x in t.vertices:
        nx_ = set(t.neighbors(x))
        for y in nx_:
            if y <= x:
                continue
            for z in nx_ & set(t.neighbors(y)):
                if z > y:
                    out.append((x, y, z))
    return sorted(out)


def _inside(t: Triangulation, tri: tuple[int, int, int], outer: tuple[int, ...]) -> frozenset[int]:
    # vertices of G - tri not reachable from an outer vertex lie inside tri
    cut = set(tri)
    start = next(v for v in outer if v not in cut)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in t.neighbors(v):
            if w not in cut and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(v for v in t.vertices if v not in cut and v not in seen)


def find_nonempty_triangles(t: Triangulation) -> list[TriangleRef]:
    outer = t.outer
    outer_key = tuple(sorted(outer))
    facial = {tuple(sorted(f)) for f in t.faces()}
    out = []
    for tri in triangles(t):
        if tri == outer_key:
            interior = frozenset(v for v in t.vertices if v not in tri)
        elif tri in facial:
            continue
        else:
            interior = _inside(t, tri, outer)
        if interior:
            out.append(TriangleRef(tri, interior))
    return out


def select_minimal(candidates: list[TriangleRef]) -> TriangleRef:
    if not candidates:
        raise NoSeparator("no non-empty triangle to split along")
    minimal = [c for c in candidates if not any(d.interior < c.interior for d in candidates)]
    return min(minimal, key=lambda c: c.vertices)


def split(t: Triangulation, delta: TriangleRef) -> SplitResult:
    x, y, z = delta.vertices
    if not delta.interior:
        raise ValidationError(f"triangle {delta.vertices} is empty")
    inside = set(delta.interior) | {x, y, z}
    out_vertices = [v for v in t.vertices if v not in delta.interior]

    g_out = Triangulation(t.embedding.restrict(out_vertices), t.original_vertices - delta.interior)

    e_in = t.embedding.restrict(inside)
    key = {x, y, z}
    outer_he = next(he for he, walk in e_in.face_walks() if set(walk) == key)
    g_in = Triangulation(PlanarEmbedding(e_in.rotation, outer_he), t.original_vertices & inside)
    if not is_four_connected(g_in):
        raise MinimalityViolation(f"triangle {delta.vertices} does not have inclusion-minimal interior")
    return SplitResult(g_out, g_in, delta)


def peeling_schedule(t: Triangulation) -> list[SplitResult]:
    """Split along minimal non-empty triangles until only a triangle is left.

    Equivalent to calling ``select_minimal(find_nonempty_triangles(g))`` on
    the shrinking graph each round.  Interiors of non-empty triangles are
    laminar, so the candidates are computed once; a triangle becomes minimal
    as soon as every triangle nested inside it has been peeled.
    """
    cands = find_nonempty_triangles(t)
    if not cands:
        return []
    size = {c.vertices: len(c.interior) for c in cands}
    containing: dict[int, list[tuple[int, int, int]]] = {}
    for c in cands:
        for v in c.interior:
            containing.setdefault(v, []).append(c.vertices)
    pending = {c.vertices: 0 for c in cands}
    parent = {}
    for c in cands:
        enclosing = [d for v in c.vertices for d in containing.get(v, ())]
        if enclosing:
            p = min(enclosing, key=lambda d: (size[d], d))
            parent[c.vertices] = p
            pending[p] += 1
    by_key = {c.vertices: c for c in cands}

    ready = [k for k, cnt in pending.items() if cnt == 0]
    heapq.heapify(ready)
    schedule = []
    current = t
    alive = set(t.vertices)
    while ready:
        key = heapq.heappop(ready)
        interior = frozenset(v for v in by_key[key].interior if v in alive)
        res = split(current, TriangleRef(key, interior))
        schedule.append(res)
        alive -= interior
        current = res.g_out
        p = parent.get(key)
        if p is not None:
            pending[p] -= 1
            if pending[p] == 0:
                heapq.heappush(ready, p)
    return schedule
