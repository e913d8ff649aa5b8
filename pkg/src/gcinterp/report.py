"""Analysis report assembly and deterministic JSON serialization."""

from __future__ import annotations

import json

from .gc import GCAnalysis, Verdict
from .generators import SearchReport
from .geometry import Line
from .nodefile import to_document
from .polynomials import Poly2


def line_doc(line: Line) -> dict:
    return {"a": line.a, "b": line.b, "c": line.c, "equation": str(line)}


def poly_doc(p: Poly2) -> str:
    return str(p)


def analysis_report(an: GCAnalysis) -> dict:
    """Full pipeline report; keys appear in a fixed order."""
    nodes = an.nodes
    doc: dict = {
        "degree": an.n,
        "node_count": len(nodes),
        "nodes": to_document(nodes)["nodes"],
        "poised": an.poised,
    }
    census = [
        {"line": line_doc(e.line), "count": e.count, "nodes": sorted(e.nodes)} for e in an.census
    ]
    doc["maximal_lines"] = [line_doc(l) for l in an.maximal_lines]
    if not an.poised:
        doc["gc"] = False
        doc["line_census"] = census
        doc["verdict"] = verdict_doc(an.verdict)
        return doc
    gc = an.gc
    doc["gc"] = gc.is_gc
    doc["fundamental_polynomials"] = [poly_doc(p) for p in an.fundamentals]
    witnesses = []
    for k in range(len(nodes)):
        w = an.witness(k)
        entry = {"node": k, "factorizable": w is not None}
        if w is not None:
            entry["scale"] = str(w.scale)
            entry["factors"] = [line_doc(l) for l in w.factors]
            entry["profile"] = an.profile(k)
        witnesses.append(entry)
    doc["witnesses"] = witnesses
    doc["line_census"] = census
    if gc:
        doc["usage_census"] = [
            {"line": line_doc(r.line), "users": sorted(r.users)} for r in an.usage
        ]
    doc["verdict"] = verdict_doc(an.verdict)
    return doc


def verdict_doc(v: Verdict) -> dict:
    return {"kind": v.kind.value, "lines": [line_doc(l) for l in v.lines]}


def search_doc(report: SearchReport, timing: bool = False) -> dict:
    doc = {
        "seed": report.seed,
        "trials": report.trials,
        "degree": report.degree,
        "generated": report.generated,
        "counts": dict(report.counts),
        "by_family": dict(report.by_family),
        "counterexamples": report.counterexamples,
        "counterexample_sets": [to_document(ns) for ns in report.counterexample_sets],
    }
    if timing:
        doc["elapsed_seconds"] = round(report.elapsed, 3)
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
