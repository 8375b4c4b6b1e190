from fractions import Fraction

import pytest

from planar_interval.builder import base_triangle
from planar_interval.errors import ParseError, ValidationError
from planar_interval.representation import Interval, Representation, merge, normalize
from planar_interval.verify import depth, displayed, intersection_edges


def test_interval_rejects_degenerate():
    with pytest.raises(ValidationError):
        Interval(1, 1)
    with pytest.raises(ValidationError):
        Interval(2, 1)


def test_merge_joins_touching_and_overlapping():
    ivs = [Interval(3, 4), Interval(0, 1), Interval(Fraction(1, 2), 2), Interval(2, Fraction(5, 2))]
    assert merge(ivs) == [Interval(0, Fraction(5, 2)), Interval(3, 4)]


def test_base_triangle_json_bit_exact():
    rep, _ = base_triangle(0, 1, 2)
    assert rep.dumps() == (
        '{\n  "vertices": {\n    "0": [\n      [\n        "0",\n        "3"\n      ]\n    ],\n'
        '    "1": [\n      [\n        "1",\n        "4"\n      ],\n      [\n        "6",\n        "7"\n      ]\n    ],\n'
        '    "2": [\n      [\n        "2",\n        "5"\n      ]\n    ]\n  }\n}\n'
    )


def test_json_round_trip_with_rationals():
    rep = Representation({10: [Interval(Fraction(-1, 3), Fraction(7, 9))], 2: [Interval(0, 5), Interval(Fraction(11, 2), 6)]})
    doc = rep.to_json()
    assert list(doc["vertices"]) == ["2", "10"]
    assert doc["vertices"]["10"] == [["-1/3", "7/9"]]
    again = Representation.loads(rep.dumps())
    assert again == rep
    assert again.dumps() == rep.dumps()


def test_loads_accepts_numbers_and_decimal_strings():
    rep = Representation.loads('{"vertices": {"0": [[0, 0.5]], "1": [["1/4", "3"]]}}')
    assert rep[0] == (Interval(0, Fraction(1, 2)),)
    assert rep[1] == (Interval(Fraction(1, 4), 3),)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"x": 1}',
        '{"vertices": {"a": [[0, 1]]}}',
        '{"vertices": {"0": [[0]]}}',
        '{"vertices": {"0": [["p", 1]]}}',
        '{"vertices": {"0": [[true, 1]]}}',
    ],
)
def test_loads_rejects_malformed(text):
    with pytest.raises(ParseError):
        Representation.loads(text)


def test_loads_rejects_reversed_interval():
    with pytest.raises(ValidationError):
        Representation.loads('{"vertices": {"0": [[2, 1]]}}')


def test_normalize_base_triangle():
    rep, _ = base_triangle(0, 1, 2)
    norm = normalize(rep)
    assert norm.endpoints() == [0, 2, 4, 6, 8, 10, 12, 14]
    assert '"14"' in norm.dumps() and "/" not in norm.dumps()


def test_normalize_preserves_structure():
    rep = Representation(
        {
            0: [Interval(Fraction(1, 3), Fraction(1, 2)), Interval(5, 6)],
            1: [Interval(Fraction(1, 2), 2)],
            2: [Interval(Fraction(7, 4), 9)],
        }
    )
    norm = normalize(rep)
    assert intersection_edges(norm) == intersection_edges(rep)
    assert depth(norm) == depth(rep)
    assert {v for v in displayed(norm)[0]} == {v for v in displayed(rep)[0]}
    assert set(displayed(norm)[1]) == set(displayed(rep)[1])


def test_without_and_restrict():
    rep, _ = base_triangle(0, 1, 2)
    assert len(rep.without(1, 1)[1]) == 1
    assert 0 not in rep.without(0, 0)
    assert rep.restrict([0, 2]).vertices == [0, 2]
