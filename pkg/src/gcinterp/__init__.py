"""Exact bivariate Lagrange interpolation, GC_n node sets and line usage."""

from .errors import *  # noqa: F401,F403
from .gc import (
    FactorizationWitness,
    GCAnalysis,
    GCResult,
    LineCensus,
    UsageRecord,
    Verdict,
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
from .geometry import Line, NodeSet, Point, canonical, collinear, incident, line_through
from .interpolation import (
    FundamentalPoly,
    InterpolationProblem,
    dimension,
    fundamental_polynomial,
    fundamental_polynomials,
    interpolate,
    is_poised,
)
from .polynomials import Poly1, Poly2, divide_by_line, evaluate, multiply_linear, restrict_to_line

__version__ = "0.1.0"
