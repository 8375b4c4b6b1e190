"""Path-and-forests decompositions of 4-connected triangulations.

For outer triangle ``(x, y, z)`` the inner edges split into

* ``F_x``: a Hamiltonian path of ``G - {y, z}`` from ``x`` to ``u_x``,
* ``F_y``: a spanning tree of ``G - {x, z}``,
* ``F_z``: a spanning forest of ``G - {y}`` with ``x`` and ``z`` in different trees.

No construction is given for this, so it is found by search.  A canonical
ordering whose consecutive vertices are chained along the contour yields the
three structures directly and usually exists; when it does not, a complete
depth-first search over Hamiltonian paths runs, keeping an exact matroid
partition of the already-fixed non-path edges into the two forests.  Every
result is certified by :func:`verify_inner` before it is returned.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .errors import NotFourConnected, SearchExhausted, ValidationError

log = logging.getLogger(__name__)


def _key(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class OpposingVertices:
    u_x: int
    u_y: int
    u_z: int


def opposing_vertices(t, outer: tuple[int, int, int]) -> OpposingVertices:
    x, y, z = outer
    if set(outer) != set(t.outer):
        raise ValidationError(f"{outer} is not the outer face {t.outer}")
    out = []
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        common = sorted(set(t.neighbors(b)) & set(t.neighbors(c)) - {a})
        if len(common) != 1:
            raise NotFourConnected(
                f"edge {b}-{c} has {len(common)} inner common neighbours {common}",
                triangle=(b, c, common[0]) if common else None,
            )
        out.append(common[0])
    return OpposingVertices(*out)


@dataclass(frozen=True)
class InnerDecomposition:
    outer: tuple[int, int, int]
    opposing: OpposingVertices
    f_x_path: tuple[int, ...]
    # parent pointers; F_y is rooted at y
    f_y_parent: dict[int, int]
    # F_z minus the edge z-u_y, rooted at x, z and u_y
    f_z_parent: dict[int, int]
    k4_flag: bool = False

    @property
    def f_x_edges(self) -> set[tuple[int, int]]:
        p = self.f_x_path
        return {_key(p[i], p[i + 1]) for i in range(len(p) - 1)}

    @property
    def f_y_edges(self) -> set[tuple[int, int]]:
        return {_key(v, w) for v, w in self.f_y_parent.items()}

    @property
    def f_z_edges(self) -> set[tuple[int, int]]:
        _, _, z = self.outer
        return {_key(v, w) for v, w in self.f_z_parent.items()} | {_key(z, self.opposing.u_y)}

    def to_json(self) -> dict:
        return {
            "outer": list(self.outer),
            "opposing": {"u_x": self.opposing.u_x, "u_y": self.opposing.u_y, "u_z": self.opposing.u_z},
            "F_x": [list(e) for e in sorted(self.f_x_edges)],
            "F_y": [list(e) for e in sorted(self.f_y_edges)],
            "F_z": [list(e) for e in sorted(self.f_z_edges)],
            "path_order": list(self.f_x_path),
        }


@dataclass(frozen=True)
class FullDecomposition:
    path: tuple[int, ...]
    forest_a: dict[int, int]
    forest_b: dict[int, int]

    @property
    def path_edges(self) -> set[tuple[int, int]]:
        p = self.path
        return {_key(p[i], p[i + 1]) for i in range(len(p) - 1)}

    @property
    def forest_a_edges(self) -> set[tuple[int, int]]:
        return {_key(v, w) for v, w in self.forest_a.items()}

    @property
    def forest_b_edges(self) -> set[tuple[int, int]]:
        return {_key(v, w) for v, w in self.forest_b.items()}


@dataclass
class InnerReport:
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = bool(ok)
        if not ok and detail:
            self.details[name] = detail

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [f"{k}: {self.details.get(k, 'failed')}" for k, v in self.checks.items() if not v]


# -- forest helpers shared by the verifier ------------------------------------

def _components(vertices, edges) -> list[set[int]] | None:
    """Components of (vertices, edges); ``None`` if the edges contain a cycle."""
    parent = {v: v for v in vertices}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return None
        parent[ru] = rv
    comps: dict[int, set[int]] = {}
    for v in vertices:
        comps.setdefault(find(v), set()).add(v)
    return list(comps.values())


def _inner_edges(t, outer) -> set[tuple[int, int]]:
    o = set(outer)
    return {e for e in t.edges() if not (e[0] in o and e[1] in o)}


def verify_inner(t, outer: tuple[int, int, int], d: InnerDecomposition) -> InnerReport:
    x, y, z = outer
    rep = InnerReport()
    verts = set(t.vertices)
    n = len(verts)
    try:
        opp = opposing_vertices(t, outer)
    except (NotFourConnected, ValidationError) as exc:
        rep.record("opposing vertices", False, str(exc))
        return rep
    rep.record("opposing vertices", opp == d.opposing, f"expected {opp}, got {d.opposing}")

    fx, fy, fz = d.f_x_edges, d.f_y_edges, d.f_z_edges
    inner = _inner_edges(t, outer)
    all_edges = set(t.edges())
    stray = (fx | fy | fz) - all_edges
    rep.record("edges exist", not stray, f"not edges of G: {sorted(stray)}")
    overlap = (fx & fy) | (fx & fz) | (fy & fz)
    rep.record("disjoint", not overlap, f"in two forests: {sorted(overlap)}")
    union = fx | fy | fz
    rep.record(
        "partition of inner edges",
        union == inner,
        f"missing {sorted(inner - union)}, extra {sorted(union - inner)}",
    )

    path = d.f_x_path
    want = verts - {y, z}
    consecutive = all(t.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))
    rep.record(
        "F_x Hamiltonian path of G-{y,z} from x to u_x",
        len(path) == len(want) and set(path) == want and consecutive
        and path[0] == x and path[-1] == opp.u_x,
        f"path {path}",
    )

    dom_y = verts - {x, z}
    comps = _components(dom_y, fy) if all(a in dom_y and b in dom_y for a, b in fy) else None
    rep.record("F_y spanning tree of G-{x,z}", comps is not None and len(comps) == 1, f"F_y {sorted(fy)}")

    dom_z = verts - {y}
    comps = _components(dom_z, fz) if all(a in dom_z and b in dom_z for a, b in fz) else None
    two = comps is not None and len(comps) == 2 and not any(x in c and z in c for c in comps)
    rep.record("F_z two-tree spanning forest of G-{y} separating x and z", two, f"F_z {sorted(fz)}")
    if n == 4:
        rep.record("K4 form F_z = z u_z", fz == {_key(z, opp.u_z)}, f"F_z {sorted(fz)}")

    rep.record("x u_y in F_x", _key(x, opp.u_y) in fx)
    rep.record("z u_y in F_z", _key(z, opp.u_y) in fz)
    rep.record(
        "cardinalities n-3",
        len(fx) == len(fy) == len(fz) == n - 3,
        f"|F_x|={len(fx)} |F_y|={len(fy)} |F_z|={len(fz)}",
    )
    return rep


def extend_full(t, outer: tuple[int, int, int], d: InnerDecomposition) -> FullDecomposition:
    """Add the outer edges: ``xy`` starts the path, ``yz`` joins ``F_y``, ``xz`` joins ``F_z``.

    The result is a Hamiltonian path of ``G - z`` from ``y`` and spanning
    trees of ``G - x`` (rooted at ``y``) and ``G - y`` (rooted at ``z``).
    """
    x, y, z = outer
    forest_a = dict(d.f_y_parent)
    forest_a[z] = y
    forest_b = _rooted(d.f_z_edges | {_key(x, z)}, [z])
    full = FullDecomposition((y, *d.f_x_path), forest_a, forest_b)
    problems = verify_full(t, outer, full)
    if problems:
        raise RuntimeError(f"extended decomposition failed certification: {problems}")
    return full


def verify_full(t, outer: tuple[int, int, int], full: FullDecomposition) -> list[str]:
    """Problems with a decomposition of all edges; empty when it is valid."""
    x, y, z = outer
    verts = set(t.vertices)
    problems = []
    p, a, b = full.path_edges, full.forest_a_edges, full.forest_b_edges
    if (p & a) or (p & b) or (a & b):
        problems.append("structures share an edge")
    if p | a | b != set(t.edges()):
        problems.append("structures do not cover exactly the edges of G")
    path = full.path
    if set(path) != verts - {z} or len(path) != len(verts) - 1 or path[0] != y:
        problems.append(f"path {path} is not a Hamiltonian path of G-z from y")
    elif not all(t.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
        problems.append("path uses a non-edge")
    for name, edges, dom in (("forest_a", a, verts - {x}), ("forest_b", b, verts - {y})):
        ok = all(u in dom and v in dom for u, v in edges)
        comps = _components(dom, edges) if ok else None
        if comps is None or len(comps) != 1:
            problems.append(f"{name} is not a spanning tree of its domain")
    return problems


# -- search -------------------------------------------------------------------

class _ForestPartition:
    """Incremental partition of edges into two graphic matroids (Edmonds).

    Matroid ``Y`` is the cycle matroid on ``G - {x, z}``; matroid ``Z`` is
    the cycle matroid on ``G - {y}`` with ``x`` and ``z`` identified, so that
    its bases are exactly two-tree forests separating ``x`` from ``z``.
    """

    def __init__(self, x: int, y: int, z: int):
        self.x, self.y, self.z = x, y, z
        self.adj = ({}, {})  # per matroid: vertex -> {vertex: edge}
        self.where: dict[tuple[int, int], int] = {}

    def _ends(self, e, k):
        a, b = e
        if k == 1:
            a = self.x if a == self.z else a
            b = self.x if b == self.z else b
        return a, b

    def allowed(self, e) -> tuple[int, ...]:
        if self.y in e:
            return (0,)
        if self.x in e or self.z in e:
            return (1,)
        return (0, 1)

    def _path(self, k, a, b):
        """Edges on the forest path from a to b in matroid k, or None."""
        adj = self.adj[k]
        if a not in adj or b not in adj:
            return None
        prev = {a: None}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                break
            for w, e in adj[v].items():
                if w not in prev:
                    prev[w] = (v, e)
                    stack.append(w)
        if b not in prev:
            return None
        out = []
        v = b
        while prev[v] is not None:
            v, e = prev[v]
            out.append(e)
        return out

    def _add(self, k, e):
        a, b = self._ends(e, k)
        self.adj[k].setdefault(a, {})[b] = e
        self.adj[k].setdefault(b, {})[a] = e
        self.where[e] = k

    def _remove(self, k, e):
        a, b = self._ends(e, k)
        del self.adj[k][a][b]
        del self.adj[k][b][a]
        del self.where[e]

    def insert(self, e0) -> bool:
        """Add ``e0``, re-routing along a shortest exchange path if needed."""
        parent = {e0: None}
        queue = deque([e0])
        while queue:
            e = queue.popleft()
            for k in self.allowed(e):
                if self.where.get(e) == k:
                    continue
                cycle = self._path(k, *self._ends(e, k))
                if cycle is None:
                    cur, target = e, k
                    while True:
                        old = self.where.get(cur)
                        if old is not None:
                            self._remove(old, cur)
                        self._add(target, cur)
                        if parent[cur] is None:
                            return True
                        cur, target = parent[cur]
                for f in cycle:
                    if f not in parent:
                        parent[f] = (e, k)
                        queue.append(f)
        return False

    def copy(self) -> "_ForestPartition":
        c = _ForestPartition(self.x, self.y, self.z)
        c.adj = tuple({v: dict(nb) for v, nb in a.items()} for a in self.adj)
        c.where = dict(self.where)
        return c


def _rooted(edges, roots) -> dict[int, int]:
    adj: dict[int, list[int]] = {}
    for a, b in sorted(edges):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    parent = {}
    seen = set(roots)
    queue = deque(sorted(roots))
    while queue:
        v = queue.popleft()
        for w in sorted(adj.get(v, ())):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                queue.append(w)
    return parent


def decompose_inner(t, outer: tuple[int, int, int], node_limit: int | None = None) -> InnerDecomposition:
    """Decompose the inner edges of a 4-connected triangulation for one outer labelling.

    Tries a chained canonical ordering first (fast, but it does not exist for
    every labelling), then the complete path search.  ``node_limit`` caps the
    total number of path-search nodes.
    """
    return decompose_any(t, [outer], node_limit)[1]


def decompose_any(t, labellings, node_limit: int | None = None) -> tuple[tuple[int, int, int], InnerDecomposition]:
    """Decompose for whichever of several outer labellings is found first.

    The path search runs on all labellings side by side, so one hard
    labelling does not hold up an easy one.  Exhausting the search for any
    labelling raises: a decomposition exists for every labelling.
    """
    labellings = [tuple(o) for o in labellings]
    jobs = [(o, opposing_vertices(t, o)) for o in labellings]
    outer, d = None, None
    if t.n == 4:
        outer, opp = jobs[0]
        x, y, _ = outer
        d = InnerDecomposition(outer, opp, (x, opp.u_x), {opp.u_x: y}, {}, k4_flag=True)
    else:
        for o, opp in jobs:
            d = _ordering_search(t, o, opp)
            if d is not None:
                outer = o
                break
        else:
            log.debug("no chained canonical ordering for %s; using path search", labellings)
            outer, d = _path_search(t, jobs, node_limit)
    report = verify_inner(t, outer, d)
    if not report.ok:
        raise RuntimeError(f"decomposition failed certification: {report.failures()}")
    return outer, d


def _ordering_search(t, outer, opp) -> InnerDecomposition | None:
    """Canonical ordering x, z, u_y, ..., u_x, y chained through extreme neighbours.

    Each new vertex must see an interval of the current contour (x on the
    left, z on the right) that has the previously added vertex at one end.
    The chain of those end edges is F_x, the other end edges form F_z, and
    every covered contour vertex hangs from the vertex that covers it in F_y.
    """
    x, y, z = outer
    nbrs = {v: set(t.neighbors(v)) for v in t.vertices}
    inner_count = t.n - 3
    added = {x, z, opp.u_y}
    contour = [x, opp.u_y, z]
    order = [opp.u_y]
    steps = []  # (vertex, contour interval it covers)
    dead: set[tuple[frozenset[int], int]] = set()

    def candidates(head):
        pos = {c: i for i, c in enumerate(contour)}
        last = len(order) == inner_count - 1
        out = []
        for w in sorted(nbrs[head]):
            if w in added or w == y or (w == opp.u_x) != last:
                continue
            idx = sorted(pos[c] for c in nbrs[w] if c in added)
            lo, hi = idx[0], idx[-1]
            if hi - lo + 1 != len(idx) or len(idx) < 2:
                continue
            if pos[head] not in (lo, hi):
                continue
            out.append((w, lo, hi))
        return out

    def dfs() -> bool:
        if len(order) == inner_count:
            return True
        head = order[-1]
        state = (frozenset(added), head)
        if state in dead:
            return False
        for w, lo, hi in candidates(head):
            saved = contour[:]
            steps.append((w, contour[lo:hi + 1]))
            contour[lo + 1:hi] = [w]
            added.add(w)
            order.append(w)
            if dfs():
                return True
            steps.pop()
            order.pop()
            added.discard(w)
            contour[:] = saved
        dead.add(state)
        return False

    if not dfs():
        return None
    f_y_parent, f_z_parent = {}, {}
    prev = opp.u_y
    for w, covered in steps:
        f_z_parent[w] = covered[-1] if covered[0] == prev else covered[0]
        for c in covered[1:-1]:
            f_y_parent[c] = w
        prev = w
    for c in contour[1:-1]:
        f_y_parent[c] = y
    return InnerDecomposition(outer, opp, (x, *order), f_y_parent, f_z_parent)


class _Budget(Exception):
    pass


def _path_search(t, jobs, node_limit=None):
    """Complete path search from both ends of the path, for every job, with doubling budgets.

    Direction and labelling change the running time by orders of magnitude
    on some inputs, so round ``i`` gives each combination ``256 * 2**i``
    nodes.  Running out of candidates under budget proves that no
    decomposition exists for that labelling.
    """
    spent = 0
    rounds = 0
    while True:
        for outer, opp in jobs:
            for reverse in (False, True):
                cap = 256 << rounds
                if node_limit is not None:
                    if spent >= node_limit:
                        raise SearchExhausted(f"node limit {node_limit} reached")
                    cap = min(cap, node_limit - spent)
                try:
                    d, used = _path_attempt(t, outer, opp, cap, reverse)
                except _Budget:
                    spent += cap
                    continue
                if d is None:
                    raise SearchExhausted(f"no decomposition exists for outer {outer}: search space exhausted")
                log.debug("path search succeeded after %d nodes", spent + used)
                return outer, d
        rounds += 1


def _path_attempt(t, outer, opp, cap, reverse=False):
    x, y, z = outer
    inner = [v for v in t.vertices if v not in outer]
    nbrs = {v: [w for w in t.neighbors(v) if w not in outer] for v in inner}
    # edges leaving the path's domain are forced: y-edges to F_y, x/z-edges to F_z
    forced = []
    for v in inner:
        for w in t.neighbors(v):
            if w == y or w == z or (w == x and v != opp.u_y):
                forced.append(_key(v, w))
    base = _ForestPartition(x, y, z)
    for e in sorted(forced):
        if not base.insert(e):
            return None, 0

    start, end = opp.u_y, opp.u_x
    if reverse:
        start, end = end, start
    total = len(inner)
    visited = {start}
    closed: set[int] = set()
    path = [start]
    nodes = 0
    result = None

    def available(v):
        return sum(1 for w in nbrs[v] if w not in visited or w == path[-1])

    def feasible() -> bool:
        head = path[-1]
        rest = [v for v in inner if v not in visited]
        if not rest:
            return True
        # every unvisited vertex but the end needs two usable neighbours
        for v in rest:
            if v != end and available(v) < 2:
                return False
        # unvisited vertices must stay connected to the head
        seen = {head}
        stack = [head]
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if w not in visited and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(rest) + 1

    def close(part, v, path_nbrs) -> bool:
        """Insert the now-fixed non-path edges at ``v``; False if they do not fit."""
        for w in nbrs[v]:
            if w not in path_nbrs and w not in closed:
                if not part.insert(_key(v, w)):
                    return False
        return True

    def finish(part) -> InnerDecomposition:
        fy = [e for e, k in part.where.items() if k == 0]
        fz = [e for e, k in part.where.items() if k == 1]
        f_y_parent = _rooted(fy, [y])
        f_z_parent = _rooted(fz, [x, z])
        del f_z_parent[opp.u_y]
        order = path[::-1] if reverse else path
        return InnerDecomposition(outer, opp, (x, *order), f_y_parent, f_z_parent)

    def dfs(part) -> bool:
        nonlocal nodes, result
        nodes += 1
        if cap is not None and nodes > cap:
            raise _Budget
        head = path[-1]
        if len(path) == total:
            if head != end:
                return False
            part = part.copy()
            if not close(part, head, {path[-2], x}):
                return False
            result = finish(part)
            return True
        cand = [w for w in nbrs[head] if w not in visited and (w != end or len(path) == total - 1)]
        cand.sort(key=lambda w: (available(w), w))
        before = path[-2] if len(path) > 1 else (None if reverse else x)
        for w in cand:
            visited.add(w)
            path.append(w)
            if feasible():
                trial = part.copy()
                if close(trial, head, {before, w}):
                    closed.add(head)
                    if dfs(trial):
                        return True
                    closed.discard(head)
            path.pop()
            visited.discard(w)
        return False

    dfs(base)
    return result, nodes
