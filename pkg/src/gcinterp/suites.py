"""Seeded verification suites and the standard corpus of node sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import DegenerateConfiguration, UnknownSuite
from .gc import GCAnalysis, VerdictKind
from .generators import (
    SplitMix64,
    affine_transform,
    derive_seed,
    principal_lattice,
    random_affine,
    random_berzolari_radon,
    random_chung_yao,
    random_line,
    transform_line,
)
from .geometry import NodeSet, Point, points_on_line
from .interpolation import InterpolationProblem, interpolate
from .polynomials import Poly2, dimension, evaluate, restrict_to_line
from .verifiers import (
    CBConfiguration,
    cayley_bacharach_checks,
    lemma_3node_report,
    lemma_4_report,
    lemma_23_report,
    verify_bezout,
)

SUITES = ("bezout", "cayley-bacharach", "lemmas", "invariants")


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {self.passed}/{self.total} {status}"


def conic_example() -> NodeSet:
    """Five nodes on the unit circle plus the origin; the origin's fundamental
    polynomial is the irreducible conic 1 - x^2 - y^2."""
    pts = [Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1), Point("3/5", "4/5"), Point(0, 0)]
    return NodeSet(tuple(pts), 2)


def standard_corpus(seed: int = 0, chung_yao_count: int = 20) -> list[tuple[str, NodeSet]]:
    corpus = [(f"principal-{n}", principal_lattice(n)) for n in range(1, 5)]
    for k in range(chung_yao_count):
        rng = SplitMix64(derive_seed(seed, k))
        corpus.append((f"chung-yao-4-{k}", random_chung_yao(rng, 4)))
    for n in range(1, 4):
        rng = SplitMix64(derive_seed(seed, 1000 + n))
        corpus.append((f"chung-yao-{n}", random_chung_yao(rng, n)))
    shear = [[1, 1], [0, 1]]
    corpus.append(("principal-4-shear", affine_transform(principal_lattice(4), shear)))
    corpus.append(("chung-yao-4-0-shear", affine_transform(corpus[4][1], shear)))
    for n in range(2, 5):
        rng = SplitMix64(derive_seed(seed, 2000 + n))
        corpus.append((f"berzolari-radon-{n}", random_berzolari_radon(rng, n)))
    corpus.append(("conic-2", conic_example()))
    return corpus


def bezout_instance(rng: SplitMix64, n: int, bound: int = 9):
    """A polynomial of degree <= n vanishing at n+1 random points of a random line.

    The polynomial is the interpolant on a Berzolari-Radon set whose first
    batch lies on the line, with zero data there and random data elsewhere.
    """
    line = random_line(rng, bound)
    nodes = random_berzolari_radon(rng, n, bound, first=line)
    data = [0] * (n + 1) + [rng.rational(bound) for _ in range(dimension(n) - n - 1)]
    if not any(data):
        data[-1] = 1
    p = interpolate(InterpolationProblem(nodes, tuple(data)))
    return p, line, list(nodes.nodes[: n + 1])


def run_bezout(seed: int, count: int, degrees=(2, 3, 4)) -> SuiteResult:
    result = SuiteResult("bezout")
    for i in range(count):
        rng = SplitMix64(derive_seed(seed, i))
        n = degrees[i % len(degrees)]
        p, line, pts = bezout_instance(rng, n)
        result.record(verify_bezout(p, line, pts), f"instance {i} (n={n}, line {line})")
    return result


def random_cb_configuration(rng: SplitMix64, bound: int = 9) -> CBConfiguration:
    while True:
        lines = [random_line(rng, bound) for _ in range(6)]
        try:
            return CBConfiguration.from_lines(lines[:3], lines[3:])
        except DegenerateConfiguration:
            continue


def run_cayley_bacharach(seed: int, count: int) -> SuiteResult:
    result = SuiteResult("cayley-bacharach")
    for i in range(count):
        rng = SplitMix64(derive_seed(seed, i))
        config = random_cb_configuration(rng)
        checks = cayley_bacharach_checks(config)
        ok = all(c.vanishes and c.nullity >= 1 for c in checks)
        result.record(ok, f"configuration {i}")
    return result


def _gc_sets(seed: int, count: int):
    for name, ns in standard_corpus(seed):
        yield name, ns
    for i in range(count):
        rng = SplitMix64(derive_seed(seed ^ 0x5EED, i))
        yield f"random-chung-yao-{i}", random_chung_yao(rng, 4)


def run_lemmas(seed: int, count: int) -> SuiteResult:
    result = SuiteResult("lemmas")
    for name, ns in _gc_sets(seed, count):
        an = GCAnalysis(ns)
        if not an.poised or not an.gc:
            continue
        result.record(an.verdict.kind is not VerdictKind.COUNTEREXAMPLE, f"{name}: theorem-4 verdict")
        reports = [lemma_23_report(an), lemma_4_report(an)]
        if an.n == 4:
            reports.append(lemma_3node_report(an))
        for rep in reports:
            result.record(rep.consistent(), f"{name}: {rep.lemma}")
    return result


def sample_vanishing(p: Poly2, line) -> bool:
    """Independent oracle: p vanishes at bound+1 distinct points of the line."""
    return all(evaluate(p, q) == 0 for q in points_on_line(line, range(p.bound + 1)))


def check_invariants(name: str, ns: NodeSet, rng: SplitMix64, result: SuiteResult) -> None:
    an = GCAnalysis(ns)
    n = ns.degree
    total_pairs = sum(comb(e.count, 2) for e in an.census)
    result.record(total_pairs == comb(len(ns), 2), f"{name}: census completeness")
    if not an.poised:
        return
    one = Poly2.constant(1, n)
    acc = Poly2.zero(n)
    for p in an.fundamentals:
        acc = acc + p
    result.record(acc == one, f"{name}: partition of unity")
    agree = True
    for k, p in enumerate(an.fundamentals):
        for e in an.census:
            u = an.uses(k, e.line)
            if not (u == restrict_to_line(p, e.line).is_zero() == sample_vanishing(p, e.line)):
                agree = False
    result.record(agree, f"{name}: uses-oracle agreement")
    if not an.gc:
        return
    for w in an.gc.witnesses:
        ok = w.product() == an.fundamentals[w.owner]
        ok &= not any(l.contains(ns[w.owner]) for l in w.factors)
        covered = {i for l in w.factors for i in an.census.by_line[l]}
        ok &= covered == set(range(len(ns))) - {w.owner}
        for l in w.factors:
            others = [m for m in w.factors if m != l]
            private = [i for i in an.census.by_line[l] if not any(m.contains(ns[i]) for m in others)]
            ok &= len(private) >= 2
        result.record(ok, f"{name}: witness {w.owner}")
    m, t = random_affine(rng, 5)
    image = GCAnalysis(affine_transform(ns, m, t))
    ok = bool(image.gc)
    if ok:
        for w, w2 in zip(an.gc.witnesses, image.gc.witnesses):
            ok &= sorted(transform_line(l, m, t).key for l in w.factors) == sorted(l.key for l in w2.factors)
    result.record(ok, f"{name}: affine equivariance")


def run_invariants(seed: int, count: int) -> SuiteResult:
    result = SuiteResult("invariants")
    rng = SplitMix64(seed)
    for name, ns in _gc_sets(seed, count):
        check_invariants(name, ns, rng, result)
    return result


def run_suite(name: str, seed: int, count: int) -> SuiteResult:
    runners = {
        "bezout": run_bezout,
        "cayley-bacharach": run_cayley_bacharach,
        "lemmas": run_lemmas,
        "invariants": run_invariants,
    }
    if name not in runners:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return runners[name](seed, count)
