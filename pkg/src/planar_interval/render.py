"""Drawings of interval representations: plain text and SVG."""

from __future__ import annotations

import io

from .representation import Representation, normalize
from .verify import displayed


def assign_rows(rep: Representation) -> list[list[tuple[int, int, int]]]:
    """Greedy first-fit rows of ``(lo, hi, vertex)``; intervals sharing a point never share a row.

    ``rep`` must already have integer endpoints (see :func:`normalize`).
    """
    bars = sorted((int(iv.lo), int(iv.hi), v) for v, ivs in rep.items() for iv in ivs)
    rows: list[list[tuple[int, int, int]]] = []
    for bar in bars:
        for row in rows:
            if row[-1][1] < bar[0]:
                row.append(bar)
                break
        else:
            rows.append([bar])
    return rows


def render_ascii(rep: Representation, highlight: bool = False) -> str:
    """One text line per row; ``[v===]`` is an interval of vertex ``v``.

    With ``highlight``, a last line marks displayed vertex portions ``v`` and
    displayed edge portions ``e``.  Endpoints are normalized first, so one
    character is half a step between consecutive distinct endpoints.
    """
    rep = normalize(rep)
    width = max((int(iv.hi) for _, ivs in rep.items() for iv in ivs), default=0) + 1
    lines = []
    for row in assign_rows(rep):
        buf = [" "] * width
        for lo, hi, v in row:
            for k in range(lo, hi + 1):
                buf[k] = "="
            buf[lo], buf[hi] = "[", "]"
            label = str(v)
            if len(label) <= hi - lo - 1:
                buf[lo + 1:lo + 1 + len(label)] = label
        lines.append("".join(buf).rstrip())
    if highlight:
        marks = [" "] * width
        dv, de = displayed(rep)
        for cs, ch in ((dv.values(), "v"), (de.values(), "e")):
            for c in cs:
                for k in range(int(c.lo) + 1, int(c.hi)):
                    marks[k] = ch
        lines.append("".join(marks).rstrip())
    return "\n".join(lines) + "\n"


def render_svg(rep: Representation, highlight: bool = False, title: str | None = None) -> str:
    """SVG drawing made with matplotlib; byte-identical across runs for the same input."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rep = normalize(rep)
    rows = assign_rows(rep)
    width = max((int(iv.hi) for _, ivs in rep.items() for iv in ivs), default=0)
    with matplotlib.rc_context({"svg.hashsalt": "planar-interval", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.25 * width + 1), 0.45 * len(rows) + 1.2))
        if highlight:
            dv, de = displayed(rep)
            for c in dv.values():
                ax.axvspan(float(c.lo), float(c.hi), color="tab:green", alpha=0.15, lw=0)
            for c in de.values():
                ax.axvspan(float(c.lo), float(c.hi), color="tab:orange", alpha=0.15, lw=0)
        cmap = plt.get_cmap("tab10")
        for r, row in enumerate(rows):
            for lo, hi, v in row:
                ax.barh(r, hi - lo, left=lo, height=0.6, color=cmap(v % 10), edgecolor="black", lw=0.6)
                ax.text((lo + hi) / 2, r, str(v), ha="center", va="center", fontsize=8)
        ax.set_yticks(range(len(rows)))
        ax.set_yticklabels([f"row {r}" for r in range(len(rows))])
        ax.invert_yaxis()
        ax.set_xlim(-1, width + 1)
        ax.set_xlabel("normalized position")
        if title:
            ax.set_title(title)
        fig.tight_layout()
        out = io.StringIO()
        fig.savefig(out, format="svg", metadata={"Date": None})
        plt.close(fig)
    return out.getvalue()


def render(rep: Representation, fmt: str, highlight: bool = False) -> str:
    if fmt == "ascii":
        return render_ascii(rep, highlight)
    if fmt == "svg":
        return render_svg(rep, highlight)
    raise ValueError(f"unknown render format {fmt!r}")
