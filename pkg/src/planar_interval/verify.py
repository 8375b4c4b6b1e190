"""Certificates computed from raw intervals alone.

The real line is cut into elementary cells: every distinct endpoint as a
point, and the open gaps between consecutive endpoints.  Each cell is
covered by a fixed set of vertices, which answers every question asked
here exactly: intersections (closed intervals, so touching counts), depth,
displayed vertices and edges, and broken ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .graph import Graph
from .representation import Representation, merge

Edge = tuple[int, int]


@dataclass(frozen=True)
class Cell:
    lo: Fraction
    hi: Fraction  # equal to lo for a point cell
    cover: frozenset[int]

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def cells(rep: Representation) -> list[Cell]:
    """Point and gap cells in left-to-right order, with their covers."""
    starts: dict[Fraction, list[int]] = {}
    ends: dict[Fraction, list[int]] = {}
    for v, ivs in rep.items():
        for iv in ivs:
            starts.setdefault(iv.lo, []).append(v)
            ends.setdefault(iv.hi, []).append(v)
    points = sorted(set(starts) | set(ends))
    active: dict[int, int] = {}
    out = []
    for i, p in enumerate(points):
        for v in starts.get(p, ()):
            active[v] = active.get(v, 0) + 1
        out.append(Cell(p, p, frozenset(active)))
        for v in ends.get(p, ()):
            active[v] -= 1
            if not active[v]:
                del active[v]
        if i + 1 < len(points):
            out.append(Cell(p, points[i + 1], frozenset(active)))
    return out


def intersection_edges(rep: Representation) -> set[Edge]:
    return _edges(cells(rep))


def _edges(cs: list[Cell]) -> set[Edge]:
    # two closed intervals meet iff the larger left endpoint lies in both,
    # so point cells see every intersection
    edges = set()
    for c in cs:
        if c.is_point and len(c.cover) > 1:
            cov = sorted(c.cover)
            for i, u in enumerate(cov):
                for v in cov[i + 1:]:
                    edges.add((u, v))
    return edges


def intersection_graph(rep: Representation) -> Graph:
    """Intersection graph over vertex ids ``0..max``; ids missing from ``rep`` stay isolated."""
    n = max(rep.vertices, default=-1) + 1
    return Graph.from_edges(n, intersection_edges(rep))


def depth(rep: Representation) -> int:
    return _depth(cells(rep))


def _depth(cs: list[Cell]) -> int:
    return max((len(c.cover) for c in cs), default=0)


def displayed(rep: Representation) -> tuple[dict[int, Cell], dict[Edge, Cell]]:
    """Displayed vertices and edges, each with the leftmost witnessing gap cell."""
    return _displayed(cells(rep))


def _displayed(cs: list[Cell]) -> tuple[dict[int, Cell], dict[Edge, Cell]]:
    verts: dict[int, Cell] = {}
    edges: dict[Edge, Cell] = {}
    for c in cs:
        if c.is_point:
            continue
        if len(c.cover) == 1:
            (v,) = c.cover
            verts.setdefault(v, c)
        elif len(c.cover) == 2:
            edges.setdefault(tuple(sorted(c.cover)), c)
    return verts, edges


def broken_ends(rep: Representation) -> list[tuple[int, Fraction]]:
    return _broken(rep, cells(rep))


def _broken(rep: Representation, cs: list[Cell]) -> list[tuple[int, Fraction]]:
    own = {}
    for v, ivs in rep.items():
        for iv in merge(ivs):
            own.setdefault(iv.lo, set()).add(v)
            own.setdefault(iv.hi, set()).add(v)
    out = []
    for c in cs:
        if c.is_point and len(c.cover) == 1:
            (v,) = c.cover
            if v in own.get(c.lo, ()):
                out.append((v, c.lo))
    return out


def count_check(rep: Representation, k: int) -> bool:
    return all(len(merge(ivs)) <= k for _, ivs in rep.items())


def max_intervals(rep: Representation) -> int:
    return max((len(merge(ivs)) for _, ivs in rep.items()), default=0)


def _covers(rep: Representation, v: int, p: Fraction) -> bool:
    return any(iv.lo <= p <= iv.hi for iv in rep[v])


@dataclass
class VerificationReport:
    vertices: list[int]
    edges: set[Edge]
    depth: int
    max_intervals_per_vertex: int
    displayed_vertices: dict[int, Cell]
    displayed_edges: dict[Edge, Cell]
    broken_ends: list[tuple[int, Fraction]]
    matches_target: bool
    missing_edges: list[Edge] = field(default_factory=list)
    extra_edges: list[Edge] = field(default_factory=list)
    i1_ok: bool | None = None
    undisplayed_vertices: list[int] = field(default_factory=list)
    i2_ok: bool | None = None
    faces_without_displayed_edge: list[tuple[int, ...]] = field(default_factory=list)

    def ok(self, max_depth: int = 3, k: int = 3) -> bool:
        """Target matched, bounds respected and, when checked, I1 and I2 hold."""
        return (
            self.matches_target
            and self.depth <= max_depth
            and self.max_intervals_per_vertex <= k
            and self.i1_ok is not False
            and self.i2_ok is not False
        )

    def problems(self, max_depth: int = 3, k: int = 3) -> list[str]:
        out = []
        if self.missing_edges:
            out.append(f"missing edges {self.missing_edges}")
        if self.extra_edges:
            out.append(f"extra edges {self.extra_edges}")
        if not self.matches_target and not (self.missing_edges or self.extra_edges):
            out.append("vertex sets differ")
        if self.depth > max_depth:
            out.append(f"depth {self.depth} > {max_depth}")
        if self.max_intervals_per_vertex > k:
            out.append(f"{self.max_intervals_per_vertex} intervals on one vertex > {k}")
        if self.i1_ok is False:
            out.append(f"I1: vertices not displayed {self.undisplayed_vertices}")
        if self.i2_ok is False:
            out.append(f"I2: inner faces without a displayed edge {self.faces_without_displayed_edge}")
        return out

    def self_check(self, rep: Representation) -> bool:
        """Re-check every witness pointwise at its midpoint or endpoint."""
        for v, c in self.displayed_vertices.items():
            m = c.midpoint
            if not _covers(rep, v, m) or any(_covers(rep, u, m) for u in rep.vertices if u != v):
                return False
        for e, c in self.displayed_edges.items():
            m = c.midpoint
            if not all(_covers(rep, u, m) for u in e):
                return False
            if any(_covers(rep, u, m) for u in rep.vertices if u not in e):
                return False
        for v, p in self.broken_ends:
            if any(_covers(rep, u, p) for u in rep.vertices if u != v):
                return False
        return True

    def to_json(self) -> dict:
        out = {
            "vertices": self.vertices,
            "intersection_edges": [list(e) for e in sorted(self.edges)],
            "depth": self.depth,
            "max_intervals_per_vertex": self.max_intervals_per_vertex,
            "displayed_vertices": {str(v): c.to_json() for v, c in sorted(self.displayed_vertices.items())},
            "displayed_edges": [[u, v, *c.to_json()] for (u, v), c in sorted(self.displayed_edges.items())],
            "broken_ends": [[v, str(p)] for v, p in self.broken_ends],
            "matches_target": self.matches_target,
            "missing_edges": [list(e) for e in self.missing_edges],
            "extra_edges": [list(e) for e in self.extra_edges],
        }
        if self.i1_ok is not None:
            out["i1_ok"] = self.i1_ok
            out["undisplayed_vertices"] = self.undisplayed_vertices
        if self.i2_ok is not None:
            out["i2_ok"] = self.i2_ok
            out["faces_without_displayed_edge"] = [list(f) for f in self.faces_without_displayed_edge]
        return out


def verify(rep: Representation, target_vertices, target_edges) -> VerificationReport:
    """Compare ``rep`` against a graph given as vertex and edge collections."""
    cs = cells(rep)
    edges = _edges(cs)
    want = {(min(u, v), max(u, v)) for u, v in target_edges}
    dv, de = _displayed(cs)
    same_vertices = set(rep.vertices) == set(target_vertices)
    return VerificationReport(
        vertices=rep.vertices,
        edges=edges,
        depth=_depth(cs),
        max_intervals_per_vertex=max_intervals(rep),
        displayed_vertices=dv,
        displayed_edges=de,
        broken_ends=_broken(rep, cs),
        matches_target=same_vertices and edges == want,
        missing_edges=sorted(want - edges),
        extra_edges=sorted(edges - want),
    )


def verify_graph(rep: Representation, g: Graph) -> VerificationReport:
    return verify(rep, g.vertices, g.edges())


def check_invariants(rep: Representation, t) -> VerificationReport:
    """Full report against a triangulation, including I1 and I2 over its inner faces."""
    if set(rep.vertices) != set(t.vertices):
        raise ValidationError(
            f"representation covers {sorted(set(rep.vertices) ^ set(t.vertices))} inconsistently with the triangulation"
        )
    report = verify(rep, t.vertices, t.edges())
    report.undisplayed_vertices = [v for v in t.vertices if v not in report.displayed_vertices]
    report.i1_ok = not report.undisplayed_vertices
    bad = []
    for f in t.inner_faces():
        if not any(tuple(sorted((f[i], f[(i + 1) % 3]))) in report.displayed_edges for i in range(3)):
            bad.append(tuple(f))
    report.faces_without_displayed_edge = bad
    report.i2_ok = not bad
    return report
