from itertools import combinations
from math import comb

import pytest
from conftest import CY_LINES

from gcinterp.errors import NotGC, NotPoised
from gcinterp.gc import (
    GCAnalysis,
    VerdictKind,
    candidate_lines,
    gc_witness,
    is_gc_set,
    maximal_lines,
    theorem4_check,
    usage_census,
    used_line_profile,
    uses,
)
from gcinterp.generators import SplitMix64, affine_transform, principal_lattice, random_points, transform_line
from gcinterp.geometry import Line, NodeSet, Point, canonical, collinear, points_on_line
from gcinterp.polynomials import evaluate
from gcinterp.suites import conic_example


def collinear_classes(points):
    """Oracle: maximal collinear subsets via the determinant test on triples."""
    classes = set()
    for i, j in combinations(range(len(points)), 2):
        members = {i, j} | {k for k in range(len(points)) if collinear(points[i], points[j], points[k])}
        classes.add(frozenset(members))
    return classes


def test_census_small_cases(triangle):
    census = candidate_lines(triangle)
    assert len(census) == 3 and all(e.count == 2 for e in census)
    census = candidate_lines([Point(0, 0), Point(1, 1), Point(2, 2)])
    assert [(e.line, e.count) for e in census] == [(canonical(1, -1, 0), 3)]


def test_census_principal_2(p2):
    census = candidate_lines(p2)
    assert {e.nodes for e in census} == collinear_classes(list(p2))
    three = {e.line for e in census.with_count(3)}
    assert three == {Line(1, 0, 0), Line(0, 1, 0), canonical(1, 1, -2)}
    assert all(e.count == 2 for e in census if e.line not in three)


@pytest.mark.parametrize("seed", range(5))
def test_census_matches_oracle_and_covers_pairs(seed):
    rng = SplitMix64(seed)
    pts = list(dict.fromkeys(random_points(rng, 12, 2)))
    census = candidate_lines(pts)
    assert {e.nodes for e in census} == collinear_classes(pts)
    assert sum(comb(e.count, 2) for e in census) == comb(len(pts), 2)


def test_maximal_lines(cy4, triangle, rng):
    assert sorted(maximal_lines(cy4)) == sorted(CY_LINES)
    assert len(maximal_lines(triangle)) == 3
    pts = random_points(rng, 15, 50)
    generic = NodeSet(tuple(pts), 4)
    assert GCAnalysis(generic).poised
    assert maximal_lines(generic) == []


def test_uses_examples(triangle, cy4):
    assert uses(triangle, 0, canonical(1, 1, -1))
    assert not uses(triangle, 0, Line(0, 1, 0))
    an = GCAnalysis(cy4)
    for k, node in enumerate(cy4):
        for line in CY_LINES:
            oracle = all(evaluate(an.fundamentals[k], q) == 0 for q in points_on_line(line, range(5)))
            assert an.uses(k, line) == (not line.contains(node)) == oracle


def test_witness_examples(triangle, cy4):
    w = gc_witness(triangle, 0)
    assert w.factors == (canonical(1, 1, -1),) and w.scale == -1
    an = GCAnalysis(cy4)
    for k, node in enumerate(cy4):
        w = an.witness(k)
        assert sorted(w.factors) == sorted(l for l in CY_LINES if not l.contains(node))
        assert w.product() == an.fundamentals[k]


def test_conic_node_has_no_witness():
    ns = conic_example()
    an = GCAnalysis(ns)
    assert an.poised
    assert an.witness(5) is None
    assert not is_gc_set(ns)
    # the origin's fundamental polynomial is the circle, up to scale
    assert str(an.fundamentals[5]) == "1 - x^2 - y^2"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_principal_lattices_are_gc(n):
    result = is_gc_set(principal_lattice(n))
    assert result and len(result.witnesses) == (n + 1) * (n + 2) // 2


def test_usage_census(triangle, cy4, p2):
    recs = {r.line: r.users for r in usage_census(triangle)}
    for k, node in enumerate(triangle):
        (opposite,) = [l for l in recs if not l.contains(node)]
        assert recs[opposite] == {k}
    recs = {r.line: r.users for r in usage_census(cy4)}
    assert set(recs) == set(CY_LINES)
    assert all(len(u) == 10 for u in recs.values())
    recs = {r.line: r.users for r in usage_census(p2)}
    assert recs[canonical(1, 1, -2)] == {0, 1, 2}


def test_usage_requires_gc():
    with pytest.raises(NotGC):
        usage_census(conic_example())


def test_profiles(triangle, cy4):
    assert all(used_line_profile(triangle, k) == [2] for k in range(3))
    assert all(used_line_profile(cy4, k) == [5, 5, 5, 5] for k in range(15))
    with pytest.raises(NotGC):
        used_line_profile(conic_example(), 5)


def test_theorem4_verdicts(cy4, p4):
    v = theorem4_check(cy4)
    assert v.kind is VerdictKind.CONFIRMED and len(v.lines) == 6
    v = theorem4_check(p4)
    assert v.kind is VerdictKind.CONFIRMED
    assert {Line(1, 0, 0), Line(0, 1, 0), canonical(1, 1, -4)} <= set(v.lines)
    pts = list(p4.nodes)
    pts[3] = pts[7]
    assert theorem4_check(pts, 4).kind is VerdictKind.NOT_POISED
    assert theorem4_check(conic_example()).kind is VerdictKind.NOT_GC


def test_not_poised_errors():
    ns = NodeSet((Point(0, 0), Point(1, 1), Point(2, 2)), 1)
    with pytest.raises(NotPoised):
        is_gc_set(ns)
    with pytest.raises(NotPoised):
        uses(ns, 0, Line(1, 0, 0))


@pytest.mark.parametrize("fixture", ["cy4", "p4"])
def test_witness_invariants(fixture, request):
    ns = request.getfixturevalue(fixture)
    an = GCAnalysis(ns)
    for w in an.gc.witnesses:
        assert w.product() == an.fundamentals[w.owner]
        assert not any(l.contains(ns[w.owner]) for l in w.factors)
        covered = {i for l in w.factors for i in an.census.by_line[l]}
        assert covered == set(range(len(ns))) - {w.owner}
        for l in w.factors:
            private = [i for i in an.census.by_line[l] if not any(m.contains(ns[i]) for m in w.factors if m != l)]
            assert len(private) >= 2


def test_affine_equivariance(cy4):
    m, t = [[1, 1], [0, 1]], (3, -2)
    an, image = GCAnalysis(cy4), GCAnalysis(affine_transform(cy4, m, t))
    for w, w2 in zip(an.gc.witnesses, image.gc.witnesses):
        assert sorted(transform_line(l, m, t) for l in w.factors) == sorted(w2.factors)
    for k in range(15):
        for e in an.census:
            assert an.uses(k, e.line) == image.uses(k, transform_line(e.line, m, t))
