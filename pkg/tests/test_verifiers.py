import pytest

from gcinterp.errors import DegenerateConfiguration, NotGC, PreconditionViolation
from gcinterp.generators import SplitMix64, principal_lattice
from gcinterp.geometry import Line, Point, canonical
from gcinterp.polynomials import Poly2, evaluate
from gcinterp.suites import bezout_instance, conic_example, random_cb_configuration
from gcinterp.verifiers import (
    CBConfiguration,
    cayley_bacharach_checks,
    lemma_3node_report,
    lemma_4_report,
    lemma_23_report,
    verify_bezout,
    verify_cayley_bacharach,
)


def test_bezout_examples():
    xy = Poly2.from_terms(2, {(1, 1): 1})
    assert verify_bezout(xy, Line(1, 0, 0), [Point(0, 0), Point(0, 1), Point(0, 2)])
    with pytest.raises(PreconditionViolation):
        verify_bezout(xy + Poly2.constant(1), Line(1, 0, 0), [Point(0, 0), Point(0, 1), Point(0, 2)])
    with pytest.raises(PreconditionViolation):
        verify_bezout(xy, Line(1, 0, 0), [Point(0, 0), Point(0, 0), Point(0, 2)])
    with pytest.raises(PreconditionViolation):
        verify_bezout(xy, Line(1, 0, 0), [Point(0, 0), Point(1, 0), Point(0, 2)])


def test_bezout_cubic_on_y_equals_one():
    rng = SplitMix64(3)
    for _ in range(20):
        p, line, pts = bezout_instance(rng, 3)
        assert all(evaluate(p, q) == 0 for q in pts)
        assert verify_bezout(p, line, pts)


def test_cb_grid():
    config = CBConfiguration.from_lines(
        [Line(1, 0, 0), Line(1, 0, -1), Line(1, 0, -2)],
        [Line(0, 1, 0), Line(0, 1, -1), Line(0, 1, -2)],
    )
    checks = cayley_bacharach_checks(config)
    assert all(c.nullity == 2 and c.vanishes for c in checks)
    assert verify_cayley_bacharach(config)


def test_cb_degenerate():
    with pytest.raises(DegenerateConfiguration):
        CBConfiguration.from_lines(
            [Line(1, 0, 0), Line(1, 0, -1), Line(0, 1, 0)],
            [Line(0, 1, 0), Line(0, 1, -1), Line(1, 1, 0)],
        )
    with pytest.raises(DegenerateConfiguration):
        # concurrent mixed lines collapse intersection points
        CBConfiguration.from_lines(
            [Line(1, 0, 0), canonical(1, -1, 0), Line(1, 0, -1)],
            [Line(0, 1, 0), canonical(1, 1, 0), Line(0, 1, -1)],
        )


def test_cb_random():
    rng = SplitMix64(11)
    for _ in range(10):
        assert verify_cayley_bacharach(random_cb_configuration(rng))


def test_cb_detects_a_non_cb_point():
    # sanity of the checker: replace the ninth point with a generic one
    config = random_cb_configuration(SplitMix64(5))
    pts = list(config.intersections)
    pts[8] = Point(101, -37)
    broken = CBConfiguration(config.first_triple, config.second_triple, tuple(pts))
    with pytest.raises(DegenerateConfiguration):
        cayley_bacharach_checks(broken)


def test_lemma_reports_chung_yao(cy4):
    rep = lemma_23_report(cy4)
    assert all(e.node_count == 2 and not e.users for e in rep.entries)
    assert rep.violations == () and not rep.assumption_2_holds
    assert lemma_4_report(cy4).entries == ()
    assert lemma_3node_report(cy4).entries == ()


def test_lemma_reports_small(triangle, p2):
    rep = lemma_23_report(triangle)
    assert len(rep.entries) == 3 and all(len(e.users) == 1 for e in rep.entries)
    assert rep.violations == ()
    assert lemma_4_report(triangle).entries == ()
    rep = lemma_23_report(p2)
    assert rep.violations == () and rep.consistent()


def test_lemma_reports_principal_4(p4):
    rep4 = lemma_4_report(p4)
    assert {e.node_count for e in rep4.entries} == {4}
    assert rep4.consistent()
    rep = lemma_3node_report(p4)
    assert rep.consistent() and all(e.users for e in rep.entries)


def test_lemma_reports_error_paths():
    with pytest.raises(NotGC):
        lemma_23_report(conic_example())
    with pytest.raises(PreconditionViolation):
        lemma_3node_report(principal_lattice(3))
