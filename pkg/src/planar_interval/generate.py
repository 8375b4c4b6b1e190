"""Seeded random triangulations: stacked insertions followed by edge flips.

The PRNG is SplitMix64 so that a corpus can be regenerated bit-for-bit by
any implementation: state advances by 0x9E3779B97F4A7C15 and each output is
the standard mix of the new state.  Bounded draws use rejection sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .graph import PlanarEmbedding, Triangulation

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next()
            if r < limit:
                return r % k


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n: int
    flips: int = 0

    def __post_init__(self):
        if self.n < 4:
            raise ValidationError("generated triangulations need n >= 4")
        if not 0 <= self.seed <= _MASK:
            raise ValidationError("seed must be an unsigned 64-bit integer")
        if self.flips < 0:
            raise ValidationError("flips must be non-negative")


def faces_to_embedding(faces: list[tuple[int, int, int]], outer: tuple[int, int]) -> PlanarEmbedding:
    """Rotation system from consistently oriented triangles.

    Face ``(a, b, c)`` is walked a -> b -> c, so c follows a around b.
    """
    succ: dict[int, dict[int, int]] = {}
    for a, b, c in faces:
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            succ.setdefault(q, {})[p] = r
    rotation = {}
    for v in sorted(succ):
        s = succ[v]
        start = min(s)
        order = [start]
        while (nxt := s[order[-1]]) != start:
            order.append(nxt)
        rotation[v] = tuple(order)
    return PlanarEmbedding(rotation, outer)


def gen_triangulation(cfg: GeneratorConfig) -> Triangulation:
    rng = SplitMix64(cfg.seed)
    outer = (0, 2, 1)
    inner: list[tuple[int, int, int]] = [(0, 1, 3), (1, 2, 3), (2, 0, 3)]
    for w in range(4, cfg.n):
        i = rng.below(len(inner))
        a, b, c = inner[i]
        inner[i] = (a, b, w)
        inner += [(b, c, w), (c, a, w)]

    if cfg.flips:
        _flip_edges(inner, outer, cfg.flips, rng)

    e = faces_to_embedding(inner + [outer], (outer[0], outer[1]))
    t = Triangulation(e, frozenset(range(cfg.n)))
    t.validate()
    return t


def _flip_edges(inner, outer, flips, rng) -> None:
    # half-edge -> index of the inner face containing it
    owner = {}
    for i, f in enumerate(inner):
        for k in range(3):
            owner[(f[k], f[(k + 1) % 3])] = i
    nbrs: dict[int, set[int]] = {}
    for (u, v) in owner:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    outer_edges = {frozenset(p) for p in ((outer[0], outer[1]), (outer[1], outer[2]), (outer[2], outer[0]))}

    for _ in range(flips):
        edges = sorted((u, v) for u in nbrs for v in nbrs[u] if u < v and frozenset((u, v)) not in outer_edges)
        u, v = edges[rng.below(len(edges))]
        i, j = owner[(u, v)], owner[(v, u)]
        w = _third(inner[i], u, v)
        p = _third(inner[j], v, u)
        if p in nbrs[w]:
            continue  # would create a parallel edge
        for f in (inner[i], inner[j]):
            for k in range(3):
                del owner[(f[k], f[(k + 1) % 3])]
        inner[i] = (u, p, w)
        inner[j] = (p, v, w)
        for idx in (i, j):
            f = inner[idx]
            for k in range(3):
                owner[(f[k], f[(k + 1) % 3])] = idx
        nbrs[u].discard(v)
        nbrs[v].discard(u)
        nbrs[w].add(p)
        nbrs[p].add(w)


def _third(face, a, b):
    # face contains the half-edge a -> b; return the remaining corner
    k = face.index(a)
    assert face[(k + 1) % 3] == b
    return face[(k + 2) % 3]
