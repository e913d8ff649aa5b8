"""Poised and GC_n families, affine images, and the randomized search.

Randomness comes from a SplitMix64 stream so every candidate set is a pure
function of (seed, trial index), independent of platform and of how trials
are scheduled across processes.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import BatchViolation, DegenerateArrangement, DuplicateNode, SingularMatrix
from .gc import VerdictKind, theorem4_check
from .geometry import Line, NodeSet, Point, canonical, intersection, points_on_line
from .polynomials import dimension

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def rational(self, bound: int) -> Fraction:
        return Fraction(self.randint(-bound, bound), self.randint(1, bound))

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def weighted(self, weights: Mapping[str, int]) -> str:
        keys = [k for k in weights if weights[k] > 0]
        total = sum(weights[k] for k in keys)
        r = self.below(total)
        for k in keys:
            r -= weights[k]
            if r < 0:
                return k
        raise AssertionError("unreachable")


def derive_seed(seed: int, index: int) -> int:
    """Sub-seed for trial ``index``; two SplitMix64 rounds decorrelate neighbours."""
    g = SplitMix64(seed ^ ((index * 0xD1B54A32D192ED03) & MASK64))
    g.next_u64()
    return g.next_u64()


# --- deterministic families -------------------------------------------------


def check_general_position(lines: Sequence[Line]) -> None:
    if len(set(lines)) != len(lines):
        raise DegenerateArrangement("repeated line in arrangement")
    meets = {}
    for i, j in combinations(range(len(lines)), 2):
        p = intersection(lines[i], lines[j])
        if p is None:
            raise DegenerateArrangement(f"lines {lines[i]} and {lines[j]} are parallel")
        if p in meets:
            raise DegenerateArrangement(f"three or more lines are concurrent at {p}")
        meets[p] = (i, j)


def chung_yao_lattice(lines: Sequence[Line]) -> NodeSet:
    """Pairwise intersections of n+2 lines in general position (a GC_n set)."""
    lines = list(lines)
    if len(lines) < 2:
        raise DegenerateArrangement("need at least two lines")
    check_general_position(lines)
    nodes = [intersection(lines[i], lines[j]) for i, j in combinations(range(len(lines)), 2)]
    return NodeSet(tuple(nodes), len(lines) - 2)


def principal_lattice(n: int) -> NodeSet:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return NodeSet(tuple(Point(d - j, j) for d in range(n + 1) for j in range(d + 1)), n)


def berzolari_radon(
    n: int, lines: Sequence[Line], point_choices: Sequence[Sequence[Point]]
) -> NodeSet:
    """n+1 points on lines[0], n on lines[1] off lines[0], ..., 1 on lines[n]."""
    if len(lines) != n + 1 or len(point_choices) != n + 1:
        raise BatchViolation(f"need {n + 1} lines and {n + 1} point batches")
    nodes = []
    for k, (line, batch) in enumerate(zip(lines, point_choices)):
        if len(batch) != n + 1 - k:
            raise BatchViolation(f"batch {k} has {len(batch)} points, expected {n + 1 - k}")
        for p in batch:
            p = p if isinstance(p, Point) else Point(*p)
            if not line.contains(p):
                raise BatchViolation(f"batch {k} point {p} is not on {line}")
            for earlier in lines[:k]:
                if earlier.contains(p):
                    raise BatchViolation(f"batch {k} point {p} lies on earlier line {earlier}")
            nodes.append(p)
    try:
        return NodeSet(tuple(nodes), n)
    except DuplicateNode as exc:
        raise BatchViolation(str(exc)) from None


def affine_transform(nodes: NodeSet, m, t=(0, 0)) -> NodeSet:
    (a, b), (c, d) = [[Fraction(v) for v in row] for row in m]
    if a * d - b * c == 0:
        raise SingularMatrix("affine map must be invertible")
    tx, ty = Fraction(t[0]), Fraction(t[1])
    return NodeSet(tuple(Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty) for p in nodes), nodes.degree)


def transform_line(line: Line, m, t=(0, 0)) -> Line:
    """Image of ``line`` under the affine map ``p -> m p + t``."""
    (a, b), (c, d) = [[Fraction(v) for v in row] for row in m]
    det = a * d - b * c
    if det == 0:
        raise SingularMatrix("affine map must be invertible")
    # inverse linear part
    ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
    tx, ty = Fraction(t[0]), Fraction(t[1])
    # l(m^-1 (q - t)) = 0
    na = line.a * ia + line.b * ic
    nb = line.a * ib + line.b * id_
    nc = line.c - na * tx - nb * ty
    return canonical(na, nb, nc)


# --- random families --------------------------------------------------------


def random_line(rng: SplitMix64, bound: int) -> Line:
    while True:
        a, b, c = rng.randint(-bound, bound), rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a or b:
            return canonical(a, b, c)


def random_arrangement(rng: SplitMix64, count: int, bound: int) -> list[Line]:
    while True:
        lines = [random_line(rng, bound) for _ in range(count)]
        try:
            check_general_position(lines)
        except DegenerateArrangement:
            continue
        return lines


def random_chung_yao(rng: SplitMix64, n: int, bound: int = 9) -> NodeSet:
    return chung_yao_lattice(random_arrangement(rng, n + 2, bound))


def random_points(rng: SplitMix64, count: int, bound: int) -> list[Point]:
    return [Point(rng.rational(bound), rng.rational(bound)) for _ in range(count)]


def random_affine(rng: SplitMix64, bound: int):
    while True:
        m = [[rng.rational(bound) for _ in range(2)] for _ in range(2)]
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
            return m, (rng.rational(bound), rng.rational(bound))


def random_points_on_line(rng: SplitMix64, line: Line, count: int, bound: int, avoid=()) -> list[Point]:
    out: list[Point] = []
    while len(out) < count:
        (p,) = points_on_line(line, [rng.rational(bound)])
        if p in out or any(l.contains(p) for l in avoid):
            continue
        out.append(p)
    return out


def random_berzolari_radon(rng: SplitMix64, n: int, bound: int = 9, first: Line | None = None) -> NodeSet:
    lines: list[Line] = []
    batches = []
    for k in range(n + 1):
        line = first if (k == 0 and first is not None) else random_line(rng, bound)
        while line in lines:
            line = random_line(rng, bound)
        batches.append(random_points_on_line(rng, line, n + 1 - k, bound, avoid=lines))
        lines.append(line)
    return berzolari_radon(n, lines, batches)


def perturbed_lattice(rng: SplitMix64, n: int, bound: int) -> list[Point]:
    """A GC_n family member with one or two nodes nudged by small offsets."""
    if rng.below(2):
        m, t = random_affine(rng, bound)
        base = affine_transform(principal_lattice(n), m, t)
    else:
        base = random_chung_yao(rng, n, bound)
    pts = list(base.nodes)
    moves = 1 + rng.below(2)
    for _ in range(moves):
        k = rng.below(len(pts))
        dx = dy = 0
        while dx == 0 and dy == 0:
            dx = Fraction(rng.randint(-1, 1), rng.randint(bound, 2 * bound))
            dy = Fraction(rng.randint(-1, 1), rng.randint(bound, 2 * bound))
        pts[k] = Point(pts[k].x + dx, pts[k].y + dy)
    return pts


# --- counterexample search --------------------------------------------------

FAMILIES = ("random", "perturbed-lattice", "line-arrangement")
CATEGORIES = ("non-poised", "poised-non-GC", "GC-with-maximal-line", "counterexamples")


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    trials: int = 100
    degree: int = 4
    coordinate_bound: int = 9
    family_mix: Mapping[str, int] = field(
        default_factory=lambda: {"random": 1, "perturbed-lattice": 1, "line-arrangement": 1}
    )

    def validate(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.coordinate_bound < 1:
            raise ValueError("coordinate bound must be at least 1")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        unknown = set(self.family_mix) - set(FAMILIES)
        if unknown:
            raise ValueError(f"unknown families in mix: {sorted(unknown)}")
        weights = list(self.family_mix.values())
        if any(w < 0 for w in weights) or not any(weights):
            raise ValueError("family weights must be nonnegative and not all zero")


@dataclass
class SearchReport:
    seed: int
    trials: int
    degree: int
    generated: int = 0
    counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CATEGORIES, 0))
    by_family: dict[str, int] = field(default_factory=dict)
    counterexample_sets: list[NodeSet] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def counterexamples(self) -> int:
        return self.counts["counterexamples"]


def candidate(config: SearchConfig, index: int) -> tuple[str, list[Point]]:
    rng = SplitMix64(derive_seed(config.seed, index))
    family = rng.weighted(config.family_mix)
    n, bound = config.degree, config.coordinate_bound
    if family == "random":
        pts = random_points(rng, dimension(n), bound)
    elif family == "perturbed-lattice":
        pts = perturbed_lattice(rng, n, bound)
    else:
        pts = list(random_chung_yao(rng, n, bound).nodes)
    return family, pts


_VERDICT_CATEGORY = {
    VerdictKind.NOT_POISED: "non-poised",
    VerdictKind.NOT_GC: "poised-non-GC",
    VerdictKind.CONFIRMED: "GC-with-maximal-line",
    VerdictKind.COUNTEREXAMPLE: "counterexamples",
}


def run_trial(config: SearchConfig, index: int) -> tuple[str, str, list[Point]]:
    family, pts = candidate(config, index)
    verdict = theorem4_check(pts, config.degree)
    return family, _VERDICT_CATEGORY[verdict.kind], pts


def _run_chunk(args):
    config, indices = args
    out = []
    for i in indices:
        family, category, pts = run_trial(config, i)
        out.append((family, category, pts if category == "counterexamples" else None))
    return out


def counterexample_search(config: SearchConfig, jobs: int = 1) -> SearchReport:
    """Run ``config.trials`` seeded trials; the report is identical for any ``jobs``."""
    config.validate()
    start = time.perf_counter()
    indices = list(range(config.trials))
    if jobs > 1:
        chunks = [indices[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, [(config, c) for c in chunks]))
        results: list = [None] * config.trials
        for chunk, part in zip(chunks, parts):
            for i, r in zip(chunk, part):
                results[i] = r
    else:
        results = _run_chunk((config, indices))
    report = SearchReport(config.seed, config.trials, config.degree)
    for family in FAMILIES:
        if config.family_mix.get(family, 0) > 0:
            report.by_family[family] = 0
    for family, category, pts in results:
        report.generated += 1
        report.by_family[family] += 1
        report.counts[category] += 1
        if pts is not None:
            report.counterexample_sets.append(NodeSet(tuple(pts), config.degree))
    report.elapsed = time.perf_counter() - start
    return report
