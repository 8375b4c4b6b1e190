"""Interval representations with exact rational endpoints, and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError, ValidationError


@dataclass(frozen=True, order=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValidationError(f"interval [{self.lo}, {self.hi}] is empty or degenerate")

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def merge(intervals: Iterable[Interval]) -> list[Interval]:
    """Union of closed intervals as disjoint sorted intervals (touching ones join)."""
    out: list[Interval] = []
    for iv in sorted(intervals):
        if out and iv.lo <= out[-1].hi:
            if iv.hi > out[-1].hi:
                out[-1] = Interval(out[-1].lo, iv.hi)
        else:
            out.append(iv)
    return out


class Representation:
    """Vertex id -> intervals, kept sorted by left endpoint.

    Intervals of one vertex are stored as given; use :meth:`reduced` for the
    merged form.  Everything built by this package is already reduced.
    """

    def __init__(self, intervals: Mapping[int, Iterable[Interval]] | None = None):
        self._iv: dict[int, tuple[Interval, ...]] = {}
        for v, ivs in (intervals or {}).items():
            ivs = tuple(sorted(ivs))
            if not ivs:
                raise ValidationError(f"vertex {v} has no intervals")
            self._iv[int(v)] = ivs

    @property
    def vertices(self) -> list[int]:
        return sorted(self._iv)

    def __getitem__(self, v: int) -> tuple[Interval, ...]:
        return self._iv[v]

    def __contains__(self, v: int) -> bool:
        return v in self._iv

    def __len__(self) -> int:
        return len(self._iv)

    def items(self):
        return ((v, self._iv[v]) for v in self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Representation) and self._iv == other._iv

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {' u '.join(map(str, ivs))}" for v, ivs in self.items())
        return f"Representation({{{body}}})"

    def reduced(self) -> "Representation":
        return Representation({v: merge(ivs) for v, ivs in self.items()})

    def restrict(self, keep: Iterable[int]) -> "Representation":
        keep = set(keep)
        return Representation({v: ivs for v, ivs in self.items() if v in keep})

    def without(self, v: int, index: int) -> "Representation":
        """Copy with the ``index``-th interval of ``v`` removed (the vertex vanishes if it was the last)."""
        ivs = {u: list(x) for u, x in self.items()}
        del ivs[v][index]
        if not ivs[v]:
            del ivs[v]
        return Representation(ivs)

    def endpoints(self) -> list[Fraction]:
        return sorted({p for _, ivs in self.items() for iv in ivs for p in (iv.lo, iv.hi)})

    def to_json(self) -> dict:
        return {"vertices": {str(v): [[str(iv.lo), str(iv.hi)] for iv in ivs] for v, ivs in self.items()}}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, data) -> "Representation":
        if not isinstance(data, dict) or not isinstance(data.get("vertices"), dict):
            raise ParseError('representation JSON needs a "vertices" object')
        out = {}
        for key, ivs in data["vertices"].items():
            try:
                v = int(key)
            except ValueError:
                raise ParseError(f"vertex key {key!r} is not an integer") from None
            if v < 0:
                raise ParseError(f"vertex key {key!r} is negative")
            if not isinstance(ivs, list):
                raise ParseError(f"intervals of vertex {key} must be a list")
            parsed = []
            for pair in ivs:
                if not isinstance(pair, list) or len(pair) != 2:
                    raise ParseError(f"vertex {key}: interval must be a [lo, hi] pair, got {pair!r}")
                parsed.append(Interval(_rational(pair[0]), _rational(pair[1])))
            out[v] = parsed
        return cls(out)

    @classmethod
    def loads(cls, text: str) -> "Representation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, position=exc.pos) from None
        return cls.from_json(data)


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"endpoint {x!r} is not a number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        # the decimal text the file contained, not the binary float
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"endpoint {x!r} is not a rational")


def normalize(rep: Representation) -> Representation:
    """Order-preserving relabel of all endpoints onto 0, 2, 4, ..."""
    rank = {p: 2 * i for i, p in enumerate(rep.endpoints())}
    return Representation({v: [Interval(rank[iv.lo], rank[iv.hi]) for iv in ivs] for v, ivs in rep.items()})
