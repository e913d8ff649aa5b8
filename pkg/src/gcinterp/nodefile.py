"""Node-set files: JSON documents with exact rational coordinate strings.

    {"degree": 2, "nodes": [["0", "0"], ["1/2", "-3"], ...]}

Integers are accepted as coordinates as well; floats never are.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import DuplicateNode, ParseError
from .geometry import NodeSet, Point

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _locate(text: str, literal: str, start: int = 0) -> tuple[int, int, int]:
    """Line/column of the next occurrence of a JSON value at or after ``start``."""
    needle = json.dumps(literal) if isinstance(literal, str) else str(literal)
    idx = text.find(needle, start)
    if idx < 0:
        return (None, None, start)
    line, col = _position(text, idx)
    return line, col, idx + len(needle)


def parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"coordinate {value!r} must be an integer or a 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"coordinate {value!r} must be an integer or a 'p/q' string")
    m = _RATIONAL.match(value)
    if not m:
        raise ValueError(f"malformed rational {value!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {value!r}")
    return Fraction(num, den)


def loads(text: str) -> NodeSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object with 'degree' and 'nodes'", 1, 1)
    for key in ("degree", "nodes"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}", 1, 1)
    degree = doc["degree"]
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 0:
        line, col, _ = _locate(text, '"degree"')
        raise ParseError(f"degree must be a nonnegative integer, got {degree!r}", line, col)
    raw = doc["nodes"]
    if not isinstance(raw, list) or not raw:
        line, col, _ = _locate(text, '"nodes"')
        raise ParseError("nodes must be a nonempty list of [x, y] pairs", line, col)
    nodes_at = text.find('"nodes"')
    cursor = nodes_at if nodes_at >= 0 else 0
    points = []
    for k, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            line, col = _position(text, cursor)
            raise ParseError(f"node {k} must be a pair [x, y], got {pair!r}", line, col)
        coords = []
        for v in pair:
            line, col, cursor = _locate(text, v, cursor)
            try:
                coords.append(parse_rational(v))
            except ValueError as exc:
                raise ParseError(f"node {k}: {exc}", line, col) from None
        points.append(Point(*coords))
    try:
        return NodeSet(tuple(points), degree)
    except DuplicateNode as exc:
        raise ParseError(str(exc)) from None


def load(path) -> NodeSet:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def to_document(nodes: NodeSet) -> dict:
    return {"degree": nodes.degree, "nodes": [[str(p.x), str(p.y)] for p in nodes]}


def dumps(nodes: NodeSet) -> str:
    doc = to_document(nodes)
    body = ",\n".join(f"    {json.dumps(pair)}" for pair in doc["nodes"])
    return f'{{\n  "degree": {doc["degree"]},\n  "nodes": [\n{body}\n  ]\n}}\n'
