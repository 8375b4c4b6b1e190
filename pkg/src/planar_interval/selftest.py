"""Run the certification corpus and report one tab-separated line per graph."""

from __future__ import annotations

import time
from pathlib import Path
from typing import TextIO

from .builder import build_depth2, build_result
from .corpus import generated_cases, named_graphs
from .errors import PlanarIntervalError
from .graph import Graph, is_four_connected
from .verify import verify_graph

COLUMNS = ("name", "n", "m", "steps", "depth", "max_intervals", "seconds", "status")


def _cases(count: int):
    for name, g in named_graphs().items():
        yield name, g
    for case in generated_cases(count):
        yield case.name, case.graph()


def _run_one(name: str, g: Graph) -> dict:
    row = {"name": name, "n": g.n, "m": g.m, "steps": 0, "depth": "", "max_intervals": "", "seconds": 0.0}
    t0 = time.perf_counter()
    try:
        res = build_result(g, check_steps=True)
        report = verify_graph(res.representation, g)
        row.update(steps=len(res.steps), depth=report.depth, max_intervals=report.max_intervals_per_vertex)
        ok = report.ok(max_depth=3, k=3) and report.self_check(res.representation)
        row["status"] = "pass" if ok else "FAIL " + "; ".join(report.problems())
    except PlanarIntervalError as exc:
        row["status"] = f"FAIL {type(exc).__name__}: {exc}"
    row["seconds"] = time.perf_counter() - t0
    return row


def _run_depth2(name: str, g: Graph) -> dict | None:
    if g.n < 4 or g.m != 3 * g.n - 6 or g.n > 14:
        return None
    from .graph import planar_embed, triangulate_induced

    t = triangulate_induced(planar_embed(g), range(g.n))
    if not is_four_connected(t):
        return None
    row = {"name": name + "/depth2", "n": g.n, "m": g.m, "steps": 1, "depth": "", "max_intervals": "", "seconds": 0.0}
    t0 = time.perf_counter()
    try:
        rep = build_depth2(t)
        report = verify_graph(rep, g)
        row.update(depth=report.depth, max_intervals=report.max_intervals_per_vertex)
        row["status"] = "pass" if report.ok(max_depth=2, k=3) else "FAIL " + "; ".join(report.problems(max_depth=2))
    except PlanarIntervalError as exc:
        row["status"] = f"FAIL {type(exc).__name__}: {exc}"
    row["seconds"] = time.perf_counter() - t0
    return row


def run_selftest(count: int = 200, figures: str | None = None, out: TextIO | None = None) -> int:
    """Returns 0 when every graph passes, 5 otherwise."""
    rows = []
    if out is not None:
        out.write("\t".join(COLUMNS) + "\n")
    t0 = time.perf_counter()
    for name, g in _cases(count):
        for row in (_run_one(name, g), _run_depth2(name, g)):
            if row is None:
                continue
            rows.append(row)
            if out is not None:
                out.write("\t".join(f"{row[c]:.3f}" if c == "seconds" else str(row[c]) for c in COLUMNS) + "\n")
                out.flush()
    total = time.perf_counter() - t0
    failed = [r for r in rows if r["status"] != "pass"]
    if out is not None:
        out.write(f"# {len(rows) - len(failed)}/{len(rows)} passed in {total:.1f}s\n")
    if figures:
        plot_summary(rows, Path(figures))
    return 5 if failed else 0


def plot_summary(rows: list[dict], directory: Path) -> list[Path]:
    """Runtime and depth against n, one SVG each."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    directory.mkdir(parents=True, exist_ok=True)
    written = []
    plain = [r for r in rows if not r["name"].endswith("/depth2") and r["status"] == "pass"]
    with matplotlib.rc_context({"svg.hashsalt": "planar-interval"}):
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.scatter([r["n"] for r in plain], [r["seconds"] for r in plain], s=12)
        ax.set_xlabel("vertices")
        ax.set_ylabel("build + per-step checks (s)")
        fig.tight_layout()
        path = directory / "selftest_runtime.svg"
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
        written.append(path)

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.scatter([r["n"] for r in plain], [r["depth"] for r in plain], s=12, label="depth")
        ax.scatter([r["n"] for r in plain], [r["max_intervals"] for r in plain], s=12, marker="x", label="intervals per vertex")
        ax.set_xlabel("vertices")
        ax.set_yticks([1, 2, 3])
        ax.legend()
        fig.tight_layout()
        path = directory / "selftest_bounds.svg"
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
        written.append(path)
    return written
