"""Exact points, canonical lines and node sets over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DuplicateNode, IdenticalPoints

Scalar = Fraction


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coordinates are not accepted; use Fraction or 'p/q' strings")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_scalar(self.x))
        object.__setattr__(self, "y", as_scalar(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, order=True)
class Line:
    """The line ``a*x + b*y + c = 0`` in canonical integer form.

    Construct through :meth:`Line.make` (or :func:`canonical`) to get a
    normalized instance; structural equality is then geometric equality.
    """

    a: int
    b: int
    c: int

    @classmethod
    def make(cls, a, b, c) -> "Line":
        return canonical(a, b, c)

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        return self.value(p) == 0

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self):
        terms = []
        for coef, var in ((self.a, "x"), (self.b, "y")):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else str(abs(coef))
            sign = "-" if coef < 0 else "+"
            terms.append((sign, mag + var))
        if self.c:
            terms.append(("-" if self.c < 0 else "+", str(abs(self.c))))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out + " = 0"


def canonical(a, b, c) -> Line:
    """Normalize rational coefficients to the canonical integer triple."""
    a, b, c = (as_scalar(v) for v in (a, b, c))
    if a == 0 and b == 0:
        raise ValueError("a line needs (a, b) != (0, 0)")
    den = lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = (int(v * den) for v in (a, b, c))
    g = gcd(ia, ib, ic)
    ia, ib, ic = ia // g, ib // g, ic // g
    lead = ia if ia != 0 else ib
    if lead < 0:
        ia, ib, ic = -ia, -ib, -ic
    return Line(ia, ib, ic)


def collinear(p: Point, q: Point, r: Point) -> bool:
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return det == 0


def line_through(p: Point, q: Point) -> Line:
    if p == q:
        raise IdenticalPoints(f"no unique line through identical points {p}")
    a = q.y - p.y
    b = p.x - q.x
    c = -(a * p.x + b * p.y)
    return canonical(a, b, c)


def incident(line: Line, p: Point) -> bool:
    return line.contains(p)


def intersection(l1: Line, l2: Line) -> Point | None:
    """Meeting point of two lines, or None when they are parallel or equal."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return Point(x, y)


def point_on_line(line: Line) -> tuple[Point, tuple[int, int]]:
    """Base point and direction vector of the standard parametrization."""
    if line.b != 0:
        return Point(0, Fraction(-line.c, line.b)), (line.b, -line.a)
    return Point(Fraction(-line.c, line.a), 0), (0, 1)


def points_on_line(line: Line, params: Iterable) -> list[Point]:
    base, (dx, dy) = point_on_line(line)
    out = []
    for t in params:
        t = as_scalar(t)
        out.append(Point(base.x + t * dx, base.y + t * dy))
    return out


@dataclass(frozen=True)
class NodeSet:
    """Ordered, duplicate-free interpolation nodes for degree ``degree``."""

    nodes: tuple[Point, ...]
    degree: int

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point) else Point(*p) for p in self.nodes)
        object.__setattr__(self, "nodes", pts)
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise DuplicateNode(f"node {i} duplicates node {seen[p]} at {p}")
            seen[p] = i

    @classmethod
    def of(cls, points: Sequence, degree: int) -> "NodeSet":
        return cls(tuple(points), degree)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i):
        return self.nodes[i]

    def on_line(self, line: Line) -> list[int]:
        return [i for i, p in enumerate(self.nodes) if line.contains(p)]
