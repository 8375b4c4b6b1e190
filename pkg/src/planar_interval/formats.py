"""Graph file formats: edge lists, graph6 and a small JSON form."""

from __future__ import annotations

import json
import re

from .errors import ParseError
from .graph import Graph

_EDGE = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")
_G6_HEADER = ">>graph6<<"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse ``text`` as ``edges``, ``g6`` or ``json``; guess the format when ``fmt`` is None."""
    fmt = fmt or detect_format(text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "g6":
        return parse_graph6(text)
    if fmt == "json":
        return parse_graph_json(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def detect_format(text: str) -> str:
    body = text.strip()
    if body.startswith("{"):
        return "json"
    if body.startswith(_G6_HEADER):
        return "g6"
    lines = [ln for ln in (s.split("#", 1)[0].strip() for s in body.splitlines()) if ln]
    if len(lines) == 1 and " " not in lines[0] and not lines[0].isdigit():
        return "g6"
    return "edges"


def parse_edge_list(text: str) -> Graph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _EDGE.match(line)
        if not m:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", line=lineno)
        edges.append((int(m.group(1)), int(m.group(2))))
    if not edges:
        raise ParseError("edge list contains no edges")
    n = max(max(e) for e in edges) + 1
    return Graph.from_edges(n, edges)


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, position=exc.pos) from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('graph JSON needs "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    edges = []
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in e)):
            raise ParseError(f"edge {e!r} is not a pair of integers")
        if not all(0 <= v < n for v in e):
            raise ParseError(f"edge {e!r} has a vertex outside 0..{n - 1}")
        edges.append(tuple(e))
    return Graph.from_edges(n, edges)


def parse_graph6(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
    line = lines[0].strip()
    offset = 0
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        offset = len(_G6_HEADER)
    data = line.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126", line=1, position=offset + i)
    n, pos = _g6_size(data, offset)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise ParseError(
            f"graph6 body for n={n} needs {need} bytes, got {len(data) - pos}", line=1, position=offset + min(len(data), pos + need)
        )
    bits = []
    for b in data[pos:]:
        v = b - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise ParseError("graph6 padding bits are not zero", line=1, position=offset + len(data) - 1)
    if n == 0:
        raise ParseError("graph has no vertices", line=1, position=offset)
    return Graph.from_edges(n, edges)


def _g6_size(data: bytes, offset: int) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string", line=1, position=offset)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise ParseError("truncated graph6 vertex count", line=1, position=offset + len(data))
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n < 1 << 18:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def to_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def to_graph_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}) + "\n"


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "edges":
        return to_edge_list(g)
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "json":
        return to_graph_json(g)
    raise ValueError(f"unknown graph format {fmt!r}")
