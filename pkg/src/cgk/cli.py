"""The ``cgk`` command line: inspect, compare, and catalog chain graphs.

Exit codes: 0 for success or a true verdict, 1 for a false verdict (e.g.
``validate`` on a non-essential graph), 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .census import census as run_census
from .census import cross_validate
from .core import GraphError, MixedGraph
from .equivalence import amp_equivalent, enumerate_class, essential_graph
from .graphio import parse_graph, render_compact, render_graph
from .patterns import (
    find_antiflags,
    find_biflags,
    find_chordless_undirected_cycles,
    find_flags,
    find_immoralities,
    find_triplexes,
)
from .validate import classify_chain_components, validate_essential


def _load(path: str) -> MixedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from None
    return parse_graph(text).graph


def _fmt_set(vs) -> str:
    return "{" + ", ".join(sorted(vs)) + "}"


def cmd_check(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if not g.is_chain_graph():
        witness = next(
            (t, h) for t, h in g.arrows() if g.arrow_on_semi_directed_cycle(t, h)
        )
        print("chain graph: no")
        print(f"arrow {witness[0]} -> {witness[1]} lies on a semi-directed cycle")
        return 1
    print("chain graph: yes")
    for block, cls in sorted(classify_chain_components(g).items(), key=lambda kv: min(kv[0])):
        print(f"component {_fmt_set(block)}: {cls.value}")
    return 0


def cmd_patterns(args: argparse.Namespace) -> int:
    g = _load(args.file)
    sections = [
        ("triplexes", [repr(t) for t in sorted(find_triplexes(g))]),
        ("immoralities", [f"{a} -> {b} <- {c}" for a, b, c in (t.vertices for t in find_immoralities(g))]),
        ("flags", [f"{a} -> {b} -- {c}" for a, b, c in (t.vertices for t in find_flags(g))]),
        ("antiflags", [f"{a} -- {b} -> {c}" for a, b, c in (t.vertices for t in find_antiflags(g))]),
        ("chordless undirected cycles", [" -- ".join(c + (c[0],)) for c in find_chordless_undirected_cycles(g)]),
        ("biflags", [repr(b) for b in find_biflags(g)]),
    ]
    for title, rows in sections:
        print(f"{title}: {len(rows)}")
        for row in rows:
            print(f"  {row}")
    return 0


def cmd_equiv(args: argparse.Namespace) -> int:
    g1, g2 = _load(args.file1), _load(args.file2)
    verdict = amp_equivalent(g1, g2)
    print(f"equivalent: {'yes' if verdict else 'no'}")
    return 0 if verdict else 1


def cmd_class(args: argparse.Namespace) -> int:
    g = _load(args.file)
    cls = enumerate_class(g, cap=args.cap)
    print(f"class size: {len(cls)}")
    for member in cls:
        print(render_compact(member))
    return 0


def cmd_essential(args: argparse.Namespace) -> int:
    g = _load(args.file)
    labeled = essential_graph(enumerate_class(g, cap=args.cap))
    print(render_graph(labeled, args.format))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    g = _load(args.file)
    verdict = validate_essential(g)
    print(f"essential: {'yes' if verdict.is_essential else 'no'}")
    for failure in verdict.failures:
        print(f"  {failure.describe()}")
    return 0 if verdict.is_essential else 1


def cmd_census(args: argparse.Namespace) -> int:
    report = run_census(args.n, jobs=args.jobs)
    print(report.to_csv() if args.format == "csv" else report.to_json())
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    report = cross_validate(args.n, jobs=args.jobs)
    by_prop = {name: [] for name, _ in report.checked}
    for violation in report.violations:
        by_prop[violation.prop].append(violation)
    for name, count in report.checked:
        bad = by_prop[name]
        status = "ok" if not bad else f"{len(bad)} violations"
        print(f"{name}: {status} ({count} checks)")
        for violation in bad:
            print(f"  {violation.subject}: {violation.detail}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cgk",
        description="Chain graphs: patterns, AMP equivalence classes, essential graphs, census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="chain-graph validity and component classes")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("patterns", help="triplexes, flags, chordless cycles, biflags")
    p.add_argument("file")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("equiv", help="AMP Markov equivalence of two chain graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("class", help="enumerate the equivalence class")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=12, help="max skeleton edges (default 12)")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("essential", help="brute-force essential graph with strengths")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=12, help="max skeleton edges (default 12)")
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")
    p.set_defaults(func=cmd_essential)

    p = sub.add_parser("validate", help="essential-graph verdict with witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("census", help="count chain graphs and classes on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("selftest", help="run the cross-validation suites on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
