"""Command-line interface: ``planar-interval <command> ...``.

Exit status: 0 success, 2 usage, 3 parse error, 4 non-planar input,
5 verification failure, 6 decomposition search exhausted, 7 invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from .builder import build_depth2, build_result
from .decomposition import decompose_inner
from .errors import PlanarIntervalError, ValidationError
from .formats import parse_graph, write_graph
from .generate import GeneratorConfig, gen_triangulation
from .graph import Graph, Triangulation, is_four_connected, planar_embed, triangulate_induced
from .render import render
from .representation import Representation, normalize
from .separators import peeling_schedule
from .verify import verify_graph

log = logging.getLogger("planar_interval")

EXIT_VERIFY = 5


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph(args) -> Graph:
    return parse_graph(_read(args.graph), args.format)


def _figure_path(out: str | None, fmt: str) -> Path:
    ext = ".svg" if fmt == "svg" else ".txt"
    return Path(out).with_suffix(ext) if out else Path("representation" + ext)


def _triangulation_of(g: Graph) -> Triangulation:
    t = triangulate_induced(planar_embed(g), range(g.n))
    if t.n != g.n:
        raise ValidationError("input is not a triangulation")
    return t


def cmd_represent(args) -> int:
    g = _graph(args)
    if args.depth2:
        rep = build_depth2(_triangulation_of(g))
        bound = 2
    else:
        rep = build_result(g, check_steps=args.check_steps).representation
        bound = 3
    rep = normalize(rep)
    report = verify_graph(rep, g)
    _write(rep.dumps(), args.out)
    if args.render:
        path = _figure_path(args.out, args.render)
        path.write_text(render(rep, args.render, highlight=True))
        log.info("wrote %s", path)
    if not report.ok(max_depth=bound, k=3):
        print("FAIL " + "; ".join(report.problems(max_depth=bound)), file=sys.stderr)
        return EXIT_VERIFY
    print(f"OK depth={report.depth} max_intervals={report.max_intervals_per_vertex}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    g = _graph(args)
    rep = Representation.loads(_read(args.representation))
    report = verify_graph(rep, g)
    _write(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    if not report.ok(max_depth=args.max_depth, k=args.k):
        print("FAIL " + "; ".join(report.problems(max_depth=args.max_depth, k=args.k)), file=sys.stderr)
        return EXIT_VERIFY
    print(f"OK depth={report.depth} max_intervals={report.max_intervals_per_vertex}", file=sys.stderr)
    return 0


def cmd_decompose(args) -> int:
    g = _graph(args)
    if args.schedule:
        t = triangulate_induced(planar_embed(g), range(g.n))
        doc = [s.to_json() for s in peeling_schedule(t)]
    else:
        t = _triangulation_of(g)
        if not is_four_connected(t):
            raise ValidationError("decompose needs a 4-connected triangulation (use --schedule for others)")
        outer = tuple(args.outer) if args.outer else t.outer
        doc = decompose_inner(t, outer).to_json()
    _write(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_gen(args) -> int:
    t = gen_triangulation(GeneratorConfig(seed=args.seed, n=args.n, flips=args.flips))
    _write(write_graph(Graph.from_edges(t.n, t.edges()), args.format or "edges"), args.out)
    return 0


def cmd_render(args) -> int:
    rep = Representation.loads(_read(args.representation))
    _write(render(rep, args.render, highlight=args.highlight), args.out)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return run_selftest(count=args.count, figures=args.figures, out=sys.stdout)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-interval", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("graph", help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=["edges", "g6", "json"], help="input format (guessed if omitted)")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("represent", help="build and certify a 3-interval representation")
    graph_args(sp)
    sp.add_argument("--depth2", action="store_true", help="depth-2 construction for 4-connected triangulations")
    sp.add_argument("--render", choices=["svg", "ascii"], help="also draw the representation next to --out")
    sp.add_argument("--check-steps", action="store_true", help="verify I1 and I2 after every step")
    sp.set_defaults(func=cmd_represent)

    sp = sub.add_parser("verify", help="check a representation against a graph")
    graph_args(sp)
    sp.add_argument("representation", help="representation JSON file")
    sp.add_argument("--max-depth", type=int, default=3)
    sp.add_argument("-k", type=int, default=3, help="allowed intervals per vertex")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="path and forests of a 4-connected triangulation")
    graph_args(sp)
    sp.add_argument("--outer", type=int, nargs=3, metavar=("X", "Y", "Z"), help="outer labelling")
    sp.add_argument("--schedule", action="store_true", help="print the peeling schedule instead")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("gen", help="seeded random triangulation")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--flips", type=int, default=0)
    sp.add_argument("--format", choices=["edges", "g6", "json"], default="edges")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("render", help="draw a representation")
    sp.add_argument("representation", help="representation JSON file, '-' for stdin")
    sp.add_argument("--render", choices=["svg", "ascii"], default="ascii")
    sp.add_argument("--highlight", action="store_true", help="mark displayed portions")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("selftest", help="run the certification corpus")
    sp.add_argument("--count", type=int, default=200, help="number of generated graphs")
    sp.add_argument("--figures", help="directory for summary plots")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except PlanarIntervalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
