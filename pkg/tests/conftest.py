from fractions import Fraction
from itertools import permutations

import pytest

from gcinterp.generators import SplitMix64, chung_yao_lattice, principal_lattice
from gcinterp.geometry import NodeSet, Point, canonical


def leibniz_det(m):
    """Permutation-expansion determinant; brute-force oracle for small matrices."""
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i, j in enumerate(perm):
            prod *= m[i][j]
            if prod == 0:
                break
        total += -prod if inv % 2 else prod
    return total


@pytest.fixture
def triangle():
    return NodeSet((Point(0, 0), Point(1, 0), Point(0, 1)), 1)


@pytest.fixture
def p2():
    return principal_lattice(2)


@pytest.fixture
def p4():
    return principal_lattice(4)


# six lines in general position, small integer coefficients
CY_LINES = [
    canonical(1, 0, 0),
    canonical(0, 1, 0),
    canonical(1, 1, -6),
    canonical(1, -1, -1),
    canonical(1, 2, -7),
    canonical(2, -1, 3),
]


@pytest.fixture
def cy_lines():
    return list(CY_LINES)


@pytest.fixture
def cy4():
    return chung_yao_lattice(CY_LINES)


@pytest.fixture
def rng():
    return SplitMix64(20260101)


# filled by test_acceptance, one "PASS/FAIL criterion ..." line per check
RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
