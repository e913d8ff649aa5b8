"""Matplotlib figures for analysis reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .gc import GCAnalysis  # noqa: E402
from .svg import _clip  # noqa: E402


def plot_analysis(an: GCAnalysis, path, title: str | None = None):
    """Nodes, lines with at least three nodes, maximal lines in red.

    Nodes are annotated with their index; used-line profiles go into the
    legend text when the set is GC.
    """
    nodes = an.nodes
    xs = [p.x for p in nodes]
    ys = [p.y for p in nodes]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1
    pad = span / 10
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad

    fig, ax = plt.subplots(figsize=(6, 6))
    maximal = set(an.maximal_lines)
    for e in an.census.at_least(min(3, an.n + 1)):
        seg = _clip(e.line, x0, x1, y0, y1)
        if seg is None:
            continue
        p, q = seg
        if e.line in maximal:
            ax.plot([float(p.x), float(q.x)], [float(p.y), float(q.y)], color="#c0392b", lw=2, zorder=1)
        else:
            ax.plot([float(p.x), float(q.x)], [float(p.y), float(q.y)], color="0.6", lw=0.8, zorder=1)
    ax.scatter([float(x) for x in xs], [float(y) for y in ys], s=30, color="#2c3e50", zorder=2)
    for i, p in enumerate(nodes):
        ax.annotate(str(i), (float(p.x), float(p.y)), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_xlim(float(x0), float(x1))
    ax.set_ylim(float(y0), float(y1))
    ax.set_aspect("equal")
    verdict = an.verdict.kind.value
    ax.set_title(title or f"n = {an.n}, {len(nodes)} nodes: {verdict}")
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)
    return path
