"""Construction of 3-interval representations.

:func:`build` gives every planar graph a representation with at most three
intervals per vertex and depth at most three.  The graph is triangulated,
peeled along minimal non-empty triangles, and the pieces are added back one
at a time, starting from a fixed representation of the last triangle.  Two
invariants carry the induction: every vertex has a portion of the line to
itself, and every inner face has an edge whose two endpoints share a portion
with nobody else.

:func:`build_depth2` handles 4-connected triangulations with depth two from
a decomposition of all edges into a path and two trees.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .decomposition import FullDecomposition, InnerDecomposition, decompose_any, extend_full
from .errors import InvariantViolation, ValidationError, VerificationFailed
from .graph import Graph, Triangulation, is_four_connected, planar_embed, triangulate_induced
from .representation import Interval, Representation
from .separators import peeling_schedule
from .verify import VerificationReport, check_invariants, verify_graph

log = logging.getLogger(__name__)

Portion = tuple[Fraction, Fraction]  # an open interval (a, b)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class DisplayState:
    """Open portions known to be covered by one vertex or by one edge's ends only."""

    vertex_portion: dict[int, Portion] = field(default_factory=dict)
    edge_portion: dict[tuple[int, int], Portion] = field(default_factory=dict)
    cursor: Fraction = Fraction(0)


class Builder:
    """Mutable representation plus display state, grown step by step."""

    def __init__(self):
        self.intervals: dict[int, list[Interval]] = {}
        self.state = DisplayState()

    def representation(self) -> Representation:
        return Representation(self.intervals)

    def _add(self, v: int, iv: Interval) -> None:
        self.intervals.setdefault(v, []).append(iv)
        if iv.hi >= self.state.cursor:
            self.state.cursor = iv.hi + 1

    def base_triangle(self, x: int, y: int, z: int) -> None:
        for v, lo, hi in ((x, 0, 3), (y, 1, 4), (z, 2, 5), (y, 6, 7)):
            self._add(v, Interval(lo, hi))
        s = self.state
        s.vertex_portion.update({x: (Fraction(0), Fraction(1)), z: (Fraction(4), Fraction(5)), y: (Fraction(6), Fraction(7))})
        s.edge_portion.update({_edge(x, y): (Fraction(1), Fraction(2)), _edge(y, z): (Fraction(3), Fraction(4))})
        s.cursor = Fraction(8)

    def represent_path(self, path) -> None:
        """One interval per vertex from the cursor on; consecutive ones overlap by one unit.

        Vertex ``i`` gets ``[c + 3i, c + 3i + 4]``: it shares ``[c + 3i + 3, c + 3i + 4]``
        with the next vertex and has the stretch between the two overlaps to itself.
        """
        c = self.state.cursor
        k = len(path)
        for i, v in enumerate(path):
            lo = c + 3 * i
            self._add(v, Interval(lo, lo + 4))
            left = lo + 1 if i else lo
            right = lo + 3 if i + 1 < k else lo + 4
            self.state.vertex_portion[v] = (left, right)
            if i + 1 < k:
                self.state.edge_portion[_edge(v, path[i + 1])] = (lo + 3, lo + 4)

    def attach_child(self, v: int, portion: Portion) -> tuple[Interval, Portion]:
        """Interval for ``v`` strictly inside ``portion = (a, b)``.

        The child takes the second quarter ``[a + L/4, a + L/2]``; the open
        stretch ``(a + L/2, b)`` to its right is returned as the host's new
        portion, so later children never touch earlier ones.
        """
        a, b = portion
        if not a < b:
            raise InvariantViolation(f"portion ({a}, {b}) is empty")
        q = (b - a) / 4
        iv = Interval(a + q, a + 2 * q)
        self._add(v, iv)
        return iv, (a + 2 * q, b)

    def attach_to_vertex(self, v: int, host: int) -> None:
        if host not in self.state.vertex_portion:
            raise InvariantViolation(f"vertex {host} has no displayed portion")
        iv, rest = self.attach_child(v, self.state.vertex_portion[host])
        self.state.vertex_portion[host] = rest
        self.state.edge_portion[_edge(v, host)] = (iv.lo, iv.hi)

    def attach_to_edge(self, v: int, e: tuple[int, int]) -> None:
        e = _edge(*e)
        if e not in self.state.edge_portion:
            raise InvariantViolation(f"edge {e} has no displayed portion")
        _, rest = self.attach_child(v, self.state.edge_portion[e])
        self.state.edge_portion[e] = rest

    def extend(self, outer: tuple[int, int, int], d: InnerDecomposition) -> None:
        """Add the inner vertices of a piece whose outer triangle is already represented.

        ``xz`` must be a displayed edge.  The path gets fresh space, every
        ``F_y`` and ``F_z`` child gets an interval in its parent's portion, and
        ``u_y`` gets its third interval inside the portion of ``xz``.
        """
        x, y, z = outer
        self.represent_path(d.f_x_path[1:])
        for v in _top_down(d.f_y_parent):
            self.attach_to_vertex(v, d.f_y_parent[v])
        for v in _top_down(d.f_z_parent):
            self.attach_to_vertex(v, d.f_z_parent[v])
        self.attach_to_edge(d.opposing.u_y, (x, z))


def _top_down(parent: dict[int, int]) -> list[int]:
    """Children in breadth-first order from the roots, ties by vertex id."""
    kids: dict[int, list[int]] = {}
    for v, p in parent.items():
        kids.setdefault(p, []).append(v)
    roots = sorted(set(parent.values()) - set(parent))
    out = []
    frontier = roots
    while frontier:
        nxt = []
        for p in frontier:
            for v in sorted(kids.get(p, ())):
                out.append(v)
                nxt.append(v)
        frontier = nxt
    return out


def base_triangle(x: int, y: int, z: int) -> tuple[Representation, DisplayState]:
    b = Builder()
    b.base_triangle(x, y, z)
    return b.representation(), b.state


@dataclass
class StepRecord:
    delta: tuple[int, int, int]
    outer: tuple[int, int, int]  # labelling used, xz displayed
    piece_size: int
    report: VerificationReport | None


@dataclass
class BuildResult:
    triangulation: Triangulation
    full: Representation  # includes helper vertices
    representation: Representation  # restricted to the input's vertices
    steps: list[StepRecord]


def represent_triangulation(t: Triangulation, check_steps: bool = False) -> BuildResult:
    """Representation of a triangulation by peeling and re-inserting pieces.

    With ``check_steps`` every intermediate representation is verified
    against the intermediate triangulation, including I1 and I2, and a
    failure raises :class:`InvariantViolation`.
    """
    schedule = peeling_schedule(t)
    last = schedule[-1].g_out if schedule else t
    b = Builder()
    b.base_triangle(*last.outer)
    steps = []
    if check_steps:
        _check(b.representation(), last, "base triangle")
    for i in range(len(schedule) - 1, -1, -1):
        piece = schedule[i]
        current = schedule[i - 1].g_out if i else t
        tri = piece.delta.vertices
        shown = [e for e in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])) if e in b.state.edge_portion]
        if not shown:
            raise InvariantViolation(f"no edge of triangle {tri} is displayed")
        labellings = []
        for a, c in shown:
            (y,) = set(tri) - {a, c}
            labellings += [(a, y, c), (c, y, a)]
        outer, d = decompose_any(piece.g_in, labellings)
        b.extend(outer, d)
        report = None
        if check_steps:
            report = _check(b.representation(), current, f"step {len(schedule) - i} at triangle {tri}")
        steps.append(StepRecord(tri, outer, piece.g_in.n, report))
    full = b.representation()
    return BuildResult(t, full, full.restrict(t.original_vertices), steps)


def _check(rep: Representation, t: Triangulation, where: str) -> VerificationReport:
    report = check_invariants(rep, t)
    if not report.ok(max_depth=3, k=3):
        raise InvariantViolation(f"{where}: {'; '.join(report.problems())}")
    return report


def build(g: Graph, check_steps: bool = False) -> Representation:
    """Certified representation of a planar graph: at most 3 intervals per vertex, depth at most 3."""
    return build_result(g, check_steps).representation


def build_result(g: Graph, check_steps: bool = False) -> BuildResult:
    t = triangulate_induced(planar_embed(g), range(g.n))
    result = represent_triangulation(t, check_steps)
    report = verify_graph(result.representation, g)
    if not report.ok(max_depth=3, k=3):
        raise VerificationFailed("; ".join(report.problems()))
    return result


# -- depth two ----------------------------------------------------------------

def _spread(children: list[int], portion: Portion) -> list[tuple[int, Interval]]:
    """Children side by side inside ``portion``, with gaps at both ends and between."""
    a, b = portion
    step = (b - a) / (2 * len(children) + 1)
    return [(v, Interval(a + (2 * i + 1) * step, a + (2 * i + 2) * step)) for i, v in enumerate(children)]


def depth2_from_decomposition(full: FullDecomposition, fresh_host: int) -> Representation:
    """Path as an overlapping chain, tree children inside their parent's stretch of the chain.

    The one vertex missing from the path (``fresh_host``) gets a separate
    host interval for its children.
    """
    b = Builder()
    b.represent_path(full.path)
    hosts = dict(b.state.vertex_portion)
    start = b.state.cursor
    b._add(fresh_host, Interval(start, start + 1))
    hosts[fresh_host] = (start, start + 1)
    for forest in (full.forest_a, full.forest_b):
        kids: dict[int, list[int]] = {}
        for v, p in forest.items():
            kids.setdefault(p, []).append(v)
        for p in sorted(kids):
            # the two forests share hosts: forest_a uses the left half, forest_b the right
            a, c = hosts[p]
            mid = (a + c) / 2
            part = (a, mid) if forest is full.forest_a else (mid, c)
            for v, iv in _spread(sorted(kids[p]), part):
                b._add(v, iv)
    return b.representation()


def build_depth2(t) -> Representation:
    """Depth-2 representation with at most 3 intervals per vertex of a 4-connected triangulation."""
    if isinstance(t, Graph):
        t = triangulate_induced(planar_embed(t), range(t.n))
        if t.n != len(t.original_vertices):
            raise ValidationError("input is not a triangulation")
    if not is_four_connected(t):
        raise ValidationError("input is not 4-connected")
    x, y, z = t.outer
    outer, d = decompose_any(t, [(x, y, z)])
    full = extend_full(t, outer, d)
    rep = depth2_from_decomposition(full, outer[2])
    report = verify_graph(rep, Graph.from_edges(t.n, t.edges()))
    if not report.ok(max_depth=2, k=3):
        raise VerificationFailed("; ".join(report.problems(max_depth=2)))
    return rep
