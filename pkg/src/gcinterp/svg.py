"""SVG rendering of a node set and its rich lines.

Lines through at least three nodes are clipped exactly to the padded
bounding box; only the final coordinates are rounded for output.
"""

from __future__ import annotations

from fractions import Fraction

from .gc import LineCensus, candidate_lines
from .geometry import Line, NodeSet, Point

SIZE = 480


def _clip(line: Line, x0, x1, y0, y1) -> tuple[Point, Point] | None:
    hits = set()
    if line.b != 0:
        for x in (x0, x1):
            y = Fraction(-line.c - line.a * x, line.b)
            if y0 <= y <= y1:
                hits.add(Point(x, y))
    if line.a != 0:
        for y in (y0, y1):
            x = Fraction(-line.c - line.b * y, line.a)
            if x0 <= x <= x1:
                hits.add(Point(x, y))
    if len(hits) < 2:
        return None
    pts = sorted(hits)
    return pts[0], pts[-1]


def render_svg(nodes: NodeSet, census: LineCensus | None = None) -> str:
    census = census if census is not None else candidate_lines(nodes)
    xs = [p.x for p in nodes]
    ys = [p.y for p in nodes]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    pad = span / 10
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    scale = SIZE / max(x1 - x0, y1 - y0)

    def sx(x):
        return f"{float((x - x0) * scale):.3f}"

    def sy(y):
        return f"{float((y1 - y) * scale):.3f}"

    width = f"{float((x1 - x0) * scale):.3f}"
    height = f"{float((y1 - y0) * scale):.3f}"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    maximal = nodes.degree + 1
    for e in census:
        if e.count < 3 and e.count < maximal:
            continue
        seg = _clip(e.line, x0, x1, y0, y1)
        if seg is None:
            continue
        p, q = seg
        cls = "maximal" if e.count >= maximal else "rich"
        style = 'stroke="#c0392b" stroke-width="2.5"' if cls == "maximal" else 'stroke="#7f8c8d" stroke-width="1"'
        out.append(
            f'<line class="{cls}" x1="{sx(p.x)}" y1="{sy(p.y)}" x2="{sx(q.x)}" y2="{sy(q.y)}" {style}>'
            f"<title>{e.line} ({e.count} nodes)</title></line>"
        )
    for i, p in enumerate(nodes):
        out.append(
            f'<circle class="node" cx="{sx(p.x)}" cy="{sy(p.y)}" r="4" fill="#2c3e50">'
            f"<title>{i}: {p}</title></circle>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
