"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 counterexample (or failed verification) found.
"""

from __future__ import annotations

import argparse
import sys

from . import nodefile, report
from .errors import PreconditionError, UnknownFamily, UsageError, WrongCardinality
from .gc import GCAnalysis, VerdictKind
from .generators import (
    FAMILIES,
    SearchConfig,
    SplitMix64,
    counterexample_search,
    principal_lattice,
    random_berzolari_radon,
    random_chung_yao,
    random_points,
)
from .geometry import NodeSet
from .polynomials import dimension
from .suites import SUITES, run_suite
from .svg import render_svg

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3
GENERATE_FAMILIES = ("chung-yao", "principal", "berzolari-radon", "random")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_nodes(path: str) -> NodeSet:
    if path == "-":
        return nodefile.loads(sys.stdin.read())
    try:
        return nodefile.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    nodes = _read_nodes(args.input)
    expected = dimension(nodes.degree)
    if len(nodes) != expected:
        raise WrongCardinality(
            f"degree {nodes.degree} needs exactly {expected} nodes, the file has {len(nodes)}"
        )
    an = GCAnalysis(nodes)
    doc = report.analysis_report(an)
    _emit(report.dumps(doc), args.out)
    if args.figure:
        from .plotting import plot_analysis

        plot_analysis(an, args.figure)
    if args.svg:
        _emit(render_svg(nodes, an.census), args.svg)
    if an.verdict.kind is VerdictKind.COUNTEREXAMPLE:
        print("COUNTEREXAMPLE: GC set without a maximal line", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def generate_nodes(family: str, degree: int, seed: int, bound: int) -> NodeSet:
    rng = SplitMix64(seed)
    if family == "principal":
        return principal_lattice(degree)
    if family == "chung-yao":
        return random_chung_yao(rng, degree, bound)
    if family == "berzolari-radon":
        return random_berzolari_radon(rng, degree, bound)
    if family == "random":
        while True:
            pts = random_points(rng, dimension(degree), bound)
            if len(set(pts)) == len(pts):
                return NodeSet(tuple(pts), degree)
    raise UnknownFamily(f"unknown family {family!r}; choose from {', '.join(GENERATE_FAMILIES)}")


def cmd_generate(args) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    nodes = generate_nodes(args.family, args.degree, args.seed, args.bound)
    _emit(nodefile.dumps(nodes), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    result = run_suite(args.suite, args.seed, args.count)
    lines = [result.summary()] + [f"  failed: {f}" for f in result.failures]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if result.ok else EXIT_COUNTEREXAMPLE


def parse_mix(text: str) -> dict[str, int]:
    mix = {}
    for part in text.split(","):
        name, _, weight = part.partition("=")
        name = name.strip()
        if name not in FAMILIES:
            raise UsageError(f"unknown family {name!r} in --mix; choose from {', '.join(FAMILIES)}")
        try:
            mix[name] = int(weight) if weight else 1
        except ValueError:
            raise UsageError(f"weight for {name!r} must be an integer") from None
    return mix


def cmd_search(args) -> int:
    config = SearchConfig(
        seed=args.seed,
        trials=args.trials,
        degree=args.degree,
        coordinate_bound=args.bound,
        family_mix=parse_mix(args.mix),
    )
    try:
        config.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = counterexample_search(config, jobs=max(1, args.jobs))
    _emit(report.dumps(report.search_doc(result, timing=args.timing)), args.out)
    if result.counterexamples:
        print(f"COUNTEREXAMPLE: {result.counterexamples} set(s) serialized in the report", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_render(args) -> int:
    nodes = _read_nodes(args.input)
    _emit(render_svg(nodes), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gcinterp", description="Exact bivariate Lagrange interpolation and GC_n analysis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="full poisedness / GC / census report for a node-set file")
    p.add_argument("input", help="node-set file, or - for standard input")
    p.add_argument("--out", help="write the JSON report here instead of standard output")
    p.add_argument("--figure", help="also save a matplotlib figure (png, pdf, svg)")
    p.add_argument("--svg", help="also write the SVG rendering to this path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="emit a node-set file for a known family")
    p.add_argument("--family", default="principal", help=f"one of {', '.join(GENERATE_FAMILIES)}")
    p.add_argument("--degree", type=int, default=4, help="interpolation degree n")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized families")
    p.add_argument("--bound", type=int, default=9, help="coefficient / coordinate magnitude cap")
    p.add_argument("--out", help="output path (default standard output)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("suite", help=f"one of {', '.join(SUITES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="number of seeded instances")
    p.add_argument("--out", help="output path (default standard output)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="randomized counterexample search for the n+1 collinear nodes property")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--bound", type=int, default=9, help="numerator/denominator magnitude cap")
    p.add_argument("--mix", default="random=1,perturbed-lattice=1,line-arrangement=1",
                   help="family weights, e.g. random=2,line-arrangement=1")
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output is identical for any value")
    p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-identity)")
    p.add_argument("--out", help="output path (default standard output)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="render a node-set file as SVG")
    p.add_argument("input", help="node-set file, or - for standard input")
    p.add_argument("--out", help="output path (default standard output)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
