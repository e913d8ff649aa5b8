"""Executable checks of the Bezout factorization, the Cayley-Bacharach
special case, and census reports for the line-usage lemmas.

The lemma reports only flag violations when the node set has no maximal
line: the lemmas are statements about GC_4 sets without five collinear
nodes, and on sets that do have a maximal line their bounds need not hold
(a Chung-Yao construction line has ten users).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DegenerateConfiguration, PreconditionViolation
from .gc import GCAnalysis
from .geometry import Line, NodeSet, Point, intersection
from .interpolation import vandermonde
from .linalg import nullspace
from .polynomials import Poly2, divide_by_line, evaluate, multiply_linear


def verify_bezout(p: Poly2, line: Line, pts: Sequence[Point]) -> bool:
    """Check that ``p`` vanishing at bound+1 distinct points of ``line`` is divisible by it."""
    n = p.bound
    if len(pts) != n + 1:
        raise PreconditionViolation(f"need {n + 1} points on the line, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise PreconditionViolation("points on the line must be pairwise distinct")
    for pt in pts:
        if not line.contains(pt):
            raise PreconditionViolation(f"point {pt} is not on {line}")
        if evaluate(p, pt) != 0:
            raise PreconditionViolation(f"polynomial does not vanish at {pt}")
    q = divide_by_line(p, line)
    return q is not None and multiply_linear(q, line, n) == p


@dataclass(frozen=True)
class CBConfiguration:
    first_triple: tuple[Line, Line, Line]
    second_triple: tuple[Line, Line, Line]
    intersections: tuple[Point, ...]

    @classmethod
    def from_lines(cls, first: Sequence[Line], second: Sequence[Line]) -> "CBConfiguration":
        if len(first) != 3 or len(second) != 3:
            raise DegenerateConfiguration("need two triples of lines")
        pts = []
        for l1, l2 in product(first, second):
            p = intersection(l1, l2)
            if p is None:
                raise DegenerateConfiguration(f"{l1} and {l2} do not meet in a single point")
            pts.append(p)
        if len(set(pts)) != 9:
            raise DegenerateConfiguration("the nine intersection points are not distinct")
        return cls(tuple(first), tuple(second), tuple(pts))

    def validate(self) -> None:
        if len(self.intersections) != 9 or len(set(self.intersections)) != 9:
            raise DegenerateConfiguration("the nine intersection points are not distinct")
        for l1, l2 in product(self.first_triple, self.second_triple):
            p = intersection(l1, l2)
            if p is None or p not in self.intersections:
                raise DegenerateConfiguration(f"{l1} and {l2} do not meet at a listed point")


@dataclass(frozen=True)
class CBCheck:
    omitted: int
    nullity: int
    vanishes: bool


def cayley_bacharach_checks(config: CBConfiguration) -> list[CBCheck]:
    """For each omitted point: nullity of the cubic conditions at the other
    eight, and whether every nullspace cubic vanishes at the omitted one."""
    config.validate()
    checks = []
    pts = config.intersections
    for k in range(9):
        others = [p for i, p in enumerate(pts) if i != k]
        basis = nullspace(vandermonde(others, 3), 10)
        ok = all(evaluate(Poly2(3, tuple(v)), pts[k]) == 0 for v in basis)
        checks.append(CBCheck(k, len(basis), ok))
    return checks


def verify_cayley_bacharach(config: CBConfiguration) -> bool:
    return all(c.vanishes for c in cayley_bacharach_checks(config))


@dataclass(frozen=True)
class LemmaEntry:
    line: Line
    node_count: int
    users: frozenset[int]
    shared_lines: tuple[Line, ...] = ()


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    entries: tuple[LemmaEntry, ...]
    violations: tuple[Line, ...]
    assumption_2_holds: bool

    def consistent(self) -> bool:
        return not (self.assumption_2_holds and self.violations)


def _analysis(nodes) -> GCAnalysis:
    return nodes if isinstance(nodes, GCAnalysis) else GCAnalysis(nodes)


def _users(an: GCAnalysis) -> dict[Line, frozenset[int]]:
    return {rec.line: rec.users for rec in an.usage}


def lemma_23_report(nodes: NodeSet | GCAnalysis) -> LemmaReport:
    """2- and 3-node lines with their users; a violation is a second user."""
    an = _analysis(nodes)
    an.require_gc()
    users = _users(an)
    no_maximal = not an.maximal_lines
    entries, violations = [], []
    for e in an.census:
        if e.count not in (2, 3):
            continue
        u = users.get(e.line, frozenset())
        entries.append(LemmaEntry(e.line, e.count, u))
        if no_maximal and len(u) >= 2:
            violations.append(e.line)
    return LemmaReport("lemma-2-3-node", tuple(entries), tuple(violations), no_maximal)


def lemma_4_report(nodes: NodeSet | GCAnalysis) -> LemmaReport:
    """4-node lines with their users; triples of users also get their shared lines."""
    an = _analysis(nodes)
    gc = an.require_gc()
    users = _users(an)
    factors = {w.owner: set(w.factors) for w in gc.witnesses}
    no_maximal = not an.maximal_lines
    entries, violations = [], []
    for e in an.census.with_count(4):
        u = users.get(e.line, frozenset())
        shared: tuple[Line, ...] = ()
        if len(u) == 3:
            common = set.intersection(*(factors[k] for k in u)) - {e.line}
            shared = tuple(sorted(common, key=lambda l: l.key))
        entries.append(LemmaEntry(e.line, 4, u, shared))
        if no_maximal and (len(u) >= 4 or (len(u) == 3 and len(shared) < 2)):
            violations.append(e.line)
    return LemmaReport("lemma-4-node", tuple(entries), tuple(violations), no_maximal)


def lemma_3node_report(nodes: NodeSet | GCAnalysis) -> LemmaReport:
    """Used 4-node lines; each should have exactly three users."""
    an = _analysis(nodes)
    if an.n != 4:
        raise PreconditionViolation(f"this report applies to degree 4, got {an.n}")
    an.require_gc()
    users = _users(an)
    no_maximal = not an.maximal_lines
    entries, violations = [], []
    for e in an.census.with_count(4):
        u = users.get(e.line, frozenset())
        if not u:
            continue
        entries.append(LemmaEntry(e.line, 4, u))
        if no_maximal and len(u) != 3:
            violations.append(e.line)
    return LemmaReport("lemma-used-4-node", tuple(entries), tuple(violations), no_maximal)
