import pytest

from gcinterp import nodefile
from gcinterp.errors import ParseError
from gcinterp.generators import SplitMix64, random_chung_yao
from gcinterp.geometry import Point


def test_round_trip():
    ns = random_chung_yao(SplitMix64(7), 4)
    assert nodefile.loads(nodefile.dumps(ns)) == ns


def test_accepts_integers_and_signed_rationals():
    ns = nodefile.loads('{"degree": 1, "nodes": [[0, "0"], ["-1/2", "3"], ["+4", "2/6"]]}')
    assert list(ns) == [Point(0, 0), Point("-1/2", 3), Point(4, "1/3")]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"degree": 1, "nodes": [["0", "0"], ["1/0", "1"], ["2", "3"]]}', "zero denominator"),
        ('{"degree": 1, "nodes": [["0", "0"], [0.5, "1"], ["2", "3"]]}', "integer or a 'p/q'"),
        ('{"degree": 1, "nodes": [["0", "0"], ["x", "1"], ["2", "3"]]}', "malformed rational"),
        ('{"degree": 1, "nodes": []}', "nonempty"),
        ('{"degree": 1}', "missing field"),
        ('{"degree": -1, "nodes": [["0", "0"]]}', "nonnegative"),
        ('{"degree": 1, "nodes": [["0", "0"], ["0", "0"], ["2", "3"]]}', "duplicates"),
        ('{"degree": 1, "nodes": [["0", "0"]', "line 1"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        nodefile.loads(text)


def test_error_position():
    text = '{"degree": 1,\n "nodes": [["0", "0"],\n   ["1/0", "1"], ["2", "3"]]}'
    with pytest.raises(ParseError) as info:
        nodefile.loads(text)
    assert (info.value.line, info.value.column) == (3, 5)
