from planar_interval.builder import base_triangle, build
from planar_interval.corpus import octahedron
from planar_interval.representation import Interval, Representation, normalize
from planar_interval.render import assign_rows, render, render_ascii, render_svg
from planar_interval.verify import depth

BASE_ASCII = "[0====]     [1]\n  [1====]\n    [2====]\n v e   e v   v\n"


def test_base_triangle_three_rows():
    rep, _ = base_triangle(0, 1, 2)
    assert len(assign_rows(normalize(rep))) == 3 == depth(rep)


def test_single_vertex_one_row():
    rep = Representation({0: [Interval(0, 1)]})
    assert len(assign_rows(normalize(rep))) == 1


def test_rows_never_share_points():
    rep = normalize(build(octahedron()))
    for row in assign_rows(rep):
        for (_, hi, _), (lo, _, _) in zip(row, row[1:]):
            assert hi < lo


def test_ascii_snapshot():
    rep, _ = base_triangle(0, 1, 2)
    assert render_ascii(rep, highlight=True) == BASE_ASCII
    assert render(rep, "ascii", highlight=True) == BASE_ASCII


def test_svg_deterministic():
    rep, _ = base_triangle(0, 1, 2)
    a = render_svg(rep, highlight=True)
    b = render_svg(rep, highlight=True)
    assert a == b
    assert a.lstrip().startswith("<?xml") and "<svg" in a
