"""Poisedness, Lagrange interpolation and fundamental polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import IndexOutOfRange, NotPoised, SingularMatrix, WrongCardinality
from .geometry import NodeSet, Point, as_scalar
from .polynomials import Poly2, dimension, evaluate, monomials

__all__ = [
    "dimension",
    "InterpolationProblem",
    "FundamentalPoly",
    "vandermonde",
    "is_poised",
    "interpolate",
    "fundamental_polynomial",
    "fundamental_polynomials",
    "check_fundamental",
]


@dataclass(frozen=True)
class InterpolationProblem:
    nodes: NodeSet
    data: tuple[Fraction, ...]

    def __post_init__(self):
        data = tuple(as_scalar(c) for c in self.data)
        object.__setattr__(self, "data", data)
        if len(data) != len(self.nodes):
            raise WrongCardinality(f"{len(data)} data values for {len(self.nodes)} nodes")

    @property
    def degree(self) -> int:
        return self.nodes.degree


@dataclass(frozen=True)
class FundamentalPoly:
    owner: int
    poly: Poly2


def _check_cardinality(nodes: NodeSet) -> None:
    expected = dimension(nodes.degree)
    if len(nodes) != expected:
        raise WrongCardinality(
            f"degree {nodes.degree} needs exactly {expected} nodes, got {len(nodes)}"
        )


def vandermonde(points: Sequence[Point], n: int) -> list[list[Fraction]]:
    """Rows are the graded-lex monomials of degree <= n evaluated at each point."""
    rows = []
    for p in points:
        xs = [Fraction(1)]
        ys = [Fraction(1)]
        for _ in range(n):
            xs.append(xs[-1] * p.x)
            ys.append(ys[-1] * p.y)
        rows.append([xs[i] * ys[j] for i, j in monomials(n)])
    return rows


def is_poised(nodes: NodeSet) -> bool:
    _check_cardinality(nodes)
    return linalg.determinant(vandermonde(nodes.nodes, nodes.degree)) != 0


def _solve(nodes: NodeSet, columns: list[list[Fraction]]) -> list[Poly2]:
    _check_cardinality(nodes)
    try:
        sols = linalg.solve(vandermonde(nodes.nodes, nodes.degree), columns)
    except SingularMatrix:
        raise NotPoised(f"the {len(nodes)} nodes are not {nodes.degree}-poised") from None
    return [Poly2(nodes.degree, tuple(s)) for s in sols]


def interpolate(problem: InterpolationProblem) -> Poly2:
    return _solve(problem.nodes, [list(problem.data)])[0]


def _delta(size: int, k: int) -> list[Fraction]:
    col = [Fraction(0)] * size
    col[k] = Fraction(1)
    return col


def fundamental_polynomial(nodes: NodeSet, k: int) -> FundamentalPoly:
    if not 0 <= k < len(nodes):
        raise IndexOutOfRange(f"node index {k} outside 0..{len(nodes) - 1}")
    return FundamentalPoly(k, _solve(nodes, [_delta(len(nodes), k)])[0])


def fundamental_polynomials(nodes: NodeSet) -> list[FundamentalPoly]:
    """All fundamental polynomials from a single elimination, index-ordered."""
    size = len(nodes)
    polys = _solve(nodes, [_delta(size, k) for k in range(size)])
    return [FundamentalPoly(k, p) for k, p in enumerate(polys)]


def check_fundamental(nodes: NodeSet, fp: FundamentalPoly) -> bool:
    return all(
        evaluate(fp.poly, p) == (1 if i == fp.owner else 0) for i, p in enumerate(nodes)
    )
