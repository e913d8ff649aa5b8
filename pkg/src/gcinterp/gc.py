"""GC_n structure: line census, factorization witnesses and the uses relation.

A node set is GC_n when every fundamental polynomial splits into n linear
factors.  Every such factor passes through at least two nodes, so the
finite census of node-pair lines is a complete list of candidate factors
and detection reduces to trial division.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .errors import DuplicateNode, NotGC, NotPoised, WrongCardinality
from .geometry import Line, NodeSet, Point, line_through
from .interpolation import fundamental_polynomials, is_poised
from .polynomials import Poly2, divide_by_line


@dataclass(frozen=True)
class CensusEntry:
    line: Line
    nodes: frozenset[int]

    @property
    def count(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class LineCensus:
    entries: tuple[CensusEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @cached_property
    def by_line(self) -> dict[Line, frozenset[int]]:
        return {e.line: e.nodes for e in self.entries}

    def count(self, line: Line) -> int:
        return len(self.by_line.get(line, ()))

    def with_count(self, k: int) -> list[CensusEntry]:
        return [e for e in self.entries if e.count == k]

    def at_least(self, k: int) -> list[CensusEntry]:
        return [e for e in self.entries if e.count >= k]


@dataclass(frozen=True)
class FactorizationWitness:
    owner: int
    factors: tuple[Line, ...]
    scale: Fraction

    def product(self) -> Poly2:
        poly = Poly2.constant(self.scale)
        for line in self.factors:
            poly = poly * Poly2.from_line(line)
        return poly


@dataclass(frozen=True)
class UsageRecord:
    line: Line
    users: frozenset[int]


@dataclass(frozen=True)
class GCResult:
    is_gc: bool
    witnesses: tuple[FactorizationWitness, ...] = ()
    failing_node: int | None = None

    def __bool__(self):
        return self.is_gc


class VerdictKind(enum.Enum):
    NOT_POISED = "NotPoised"
    NOT_GC = "NotGC"
    CONFIRMED = "ConfirmedMaximalLine"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    lines: tuple[Line, ...] = ()

    @property
    def is_counterexample(self) -> bool:
        return self.kind is VerdictKind.COUNTEREXAMPLE


def candidate_lines(nodes: NodeSet | Sequence[Point]) -> LineCensus:
    pts = list(nodes)
    incidence: dict[Line, set[int]] = {}
    for i, j in combinations(range(len(pts)), 2):
        line = line_through(pts[i], pts[j])
        members = incidence.setdefault(line, set())
        members.add(i)
        members.add(j)
    entries = sorted(
        (CensusEntry(line, frozenset(idx)) for line, idx in incidence.items()),
        key=lambda e: e.line.key,
    )
    return LineCensus(tuple(entries))


def split_linear(poly: Poly2, lines: Sequence[Line]) -> tuple[list[Line], Poly2]:
    """Trial-divide ``poly`` by ``lines`` in order, repeating each line while it divides.

    Returns the extracted factors and the remaining cofactor.
    """
    factors = []
    rest = poly
    for line in lines:
        if rest.degree <= 0:
            break
        while rest.degree > 0:
            q = divide_by_line(rest, line)
            if q is None:
                break
            factors.append(line)
            rest = q
    return factors, rest


class GCAnalysis:
    """Lazily computed interpolation and GC data for one node set.

    Every quantity is computed at most once; the functional API below is a
    thin layer over this class.
    """

    def __init__(self, nodes: NodeSet):
        self.nodes = nodes
        self.n = nodes.degree
        self._witness_cache: dict[int, FactorizationWitness | None] = {}

    @cached_property
    def poised(self) -> bool:
        return is_poised(self.nodes)

    def require_poised(self):
        if not self.poised:
            raise NotPoised(f"the {len(self.nodes)} nodes are not {self.n}-poised")

    @cached_property
    def fundamentals(self) -> list[Poly2]:
        self.require_poised()
        return [fp.poly for fp in fundamental_polynomials(self.nodes)]

    @cached_property
    def census(self) -> LineCensus:
        return candidate_lines(self.nodes)

    @cached_property
    def maximal_lines(self) -> list[Line]:
        return [e.line for e in self.census.at_least(self.n + 1)]

    def _candidates_for(self, k: int) -> list[Line]:
        return [e.line for e in self.census if k not in e.nodes]

    def witness(self, k: int) -> FactorizationWitness | None:
        if k in self._witness_cache:
            return self._witness_cache[k]
        poly = self.fundamentals[k]
        factors, rest = split_linear(poly, self._candidates_for(k))
        result = None
        if rest.degree == 0 and len(factors) == self.n:
            result = FactorizationWitness(k, tuple(factors), rest.coeffs[0])
        self._witness_cache[k] = result
        return result

    @cached_property
    def gc(self) -> GCResult:
        self.require_poised()
        witnesses = []
        for k in range(len(self.nodes)):
            w = self.witness(k)
            if w is None:
                return GCResult(False, tuple(witnesses), k)
            witnesses.append(w)
        return GCResult(True, tuple(witnesses))

    def require_gc(self) -> GCResult:
        result = self.gc
        if not result:
            raise NotGC(f"node {result.failing_node} has no linear factorization")
        return result

    def uses(self, k: int, line: Line) -> bool:
        return divide_by_line(self.fundamentals[k], line) is not None

    @cached_property
    def usage(self) -> list[UsageRecord]:
        result = self.require_gc()
        users: dict[Line, set[int]] = {}
        for w in result.witnesses:
            for line in w.factors:
                users.setdefault(line, set()).add(w.owner)
        return [
            UsageRecord(e.line, frozenset(users[e.line])) for e in self.census if e.line in users
        ]

    def profile(self, k: int) -> list[int]:
        w = self.witness(k)
        if w is None:
            raise NotGC(f"node {k} has no linear factorization")
        counts = []
        for line in w.factors:
            counts.append(sum(1 for i in self.census.by_line[line] if i != k))
        return sorted(counts, reverse=True)

    @cached_property
    def verdict(self) -> Verdict:
        if not self.poised:
            return Verdict(VerdictKind.NOT_POISED)
        if not self.gc:
            return Verdict(VerdictKind.NOT_GC)
        if self.maximal_lines:
            return Verdict(VerdictKind.CONFIRMED, tuple(self.maximal_lines))
        return Verdict(VerdictKind.COUNTEREXAMPLE)


def maximal_lines(nodes: NodeSet) -> list[Line]:
    return GCAnalysis(nodes).maximal_lines


def uses(nodes: NodeSet, k: int, line: Line) -> bool:
    return GCAnalysis(nodes).uses(k, line)


def gc_witness(nodes: NodeSet, k: int) -> FactorizationWitness | None:
    return GCAnalysis(nodes).witness(k)


def is_gc_set(nodes: NodeSet) -> GCResult:
    return GCAnalysis(nodes).gc


def usage_census(nodes: NodeSet) -> list[UsageRecord]:
    return GCAnalysis(nodes).usage


def used_line_profile(nodes: NodeSet, k: int) -> list[int]:
    return GCAnalysis(nodes).profile(k)


def theorem4_check(nodes: NodeSet | Sequence[Point], degree: int | None = None) -> Verdict:
    """Classify a node set: not poised, not GC, GC with a maximal line, or counterexample.

    Accepts a raw point sequence (with ``degree``) so that coincident points
    and wrong cardinalities yield the NotPoised verdict instead of an error.
    """
    if not isinstance(nodes, NodeSet):
        if degree is None:
            raise ValueError("degree is required for a raw point sequence")
        try:
            nodes = NodeSet(tuple(nodes), degree)
        except DuplicateNode:
            return Verdict(VerdictKind.NOT_POISED)
    try:
        return GCAnalysis(nodes).verdict
    except WrongCardinality:
        return Verdict(VerdictKind.NOT_POISED)
