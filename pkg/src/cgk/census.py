"""Exhaustive census of labeled chain graphs and their equivalence classes.

Candidates are the 4^(n(n-1)/2) edge-state vectors over the canonical pair
order (absent < line < forward < backward, leftmost pair most significant).
Chain graphs are grouped into classes by (skeleton, triplex set); groups are
re-derived independently from each skeleton as a consistency check.  The
census is shardable over contiguous index ranges, and its output does not
depend on the worker count.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .core import EdgeState, GraphError, MixedGraph
from .equivalence import (
    EquivalenceClass,
    StrengthLabeledGraph,
    _orientations_of_skeleton,
    adg_essential_graph,
    class_contains_adg,
    essential_graph,
    strong_equivalence_classes,
    reduced_graph,
    EdgeStrength,
)
from .patterns import (
    Triplex,
    find_biflags,
    find_chordless_undirected_cycles,
    find_flags,
    find_triplexes,
    is_chordal,
)
from .validate import (
    ComponentClass,
    classify_chain_components,
    is_irreversible_arrow,
    is_protected_arrow,
    is_well_protected_arrow,
    property_s,
    property_s_prime,
    validate_directed_essential,
    validate_essential,
)

DEFAULT_N_CAP = 5

_STATES = (EdgeState.ABSENT, EdgeState.LINE, EdgeState.FORWARD, EdgeState.BACKWARD)

GroupKey = tuple[frozenset[tuple[str, str]], frozenset[Triplex]]


def vertex_names(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(1, n + 1))


def _pairs(names: tuple[str, ...]) -> list[tuple[str, str]]:
    return list(combinations(names, 2))


def _decode(
    names: tuple[str, ...], pairs: list[tuple[str, str]], index: int
) -> MixedGraph:
    state: dict[tuple[str, str], EdgeState] = {}
    for pair in reversed(pairs):
        index, digit = divmod(index, 4)
        if digit:
            state[pair] = _STATES[digit]
    return MixedGraph._make(names, state)


def _check_n(n: int, cap: int) -> None:
    if not 1 <= n <= cap:
        raise GraphError(f"census supports 1 <= n <= {cap}, got {n}")


def enumerate_chain_graphs(n: int, cap: int = DEFAULT_N_CAP) -> Iterator[MixedGraph]:
    """Every labeled chain graph on vertices v1..vn, in index order."""
    _check_n(n, cap)
    names = vertex_names(n)
    pairs = _pairs(names)
    for index in range(4 ** len(pairs)):
        g = _decode(names, pairs, index)
        if g.is_chain_graph():
            yield g


def _scan_range(task: tuple[int, int, int]) -> dict[GroupKey, list[int]]:
    n, lo, hi = task
    names = vertex_names(n)
    pairs = _pairs(names)
    groups: dict[GroupKey, list[int]] = {}
    for index in range(lo, hi):
        g = _decode(names, pairs, index)
        if not g.is_chain_graph():
            continue
        key = (g.skeleton_pairs(), find_triplexes(g))
        groups.setdefault(key, []).append(index)
    return groups


def _grouped_indices(n: int, jobs: int) -> dict[GroupKey, list[int]]:
    names = vertex_names(n)
    total = 4 ** len(_pairs(names))
    if jobs <= 1:
        return _scan_range((n, 0, total))
    jobs = min(jobs, total)
    bounds = [total * i // jobs for i in range(jobs + 1)]
    tasks = [(n, bounds[i], bounds[i + 1]) for i in range(jobs)]
    merged: dict[GroupKey, list[int]] = {}
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        for part in pool.map(_scan_range, tasks):
            for key, indices in part.items():
                merged.setdefault(key, []).extend(indices)
    for indices in merged.values():
        indices.sort()
    return merged


def _classes_from_groups(
    n: int, groups: dict[GroupKey, list[int]]
) -> list[EquivalenceClass]:
    names = vertex_names(n)
    pairs = _pairs(names)
    ordered = sorted(groups.values(), key=lambda idxs: idxs[0])
    return [
        EquivalenceClass(tuple(_decode(names, pairs, i) for i in idxs))
        for idxs in ordered
    ]


def equivalence_classes(
    n: int, cap: int = DEFAULT_N_CAP, jobs: int = 1
) -> list[EquivalenceClass]:
    """All equivalence classes on n vertices, ordered by first member."""
    _check_n(n, cap)
    return _classes_from_groups(n, _grouped_indices(n, jobs))


def _verify_groups(n: int, groups: dict[GroupKey, list[int]]) -> None:
    # Re-derive every class from its skeleton by the class-enumeration route
    # (all line/arrow assignments, filtered by chain-ness and triplex set) and
    # demand exact agreement with the grouped census.
    names = vertex_names(n)
    pairs = _pairs(names)
    by_skeleton: dict[frozenset[tuple[str, str]], dict[frozenset[Triplex], set[MixedGraph]]] = {}
    for (skeleton, triplexes), indices in groups.items():
        by_skeleton.setdefault(skeleton, {})[triplexes] = {
            _decode(names, pairs, i) for i in indices
        }
    for skeleton, expected in by_skeleton.items():
        rebuilt: dict[frozenset[Triplex], set[MixedGraph]] = {}
        for cand in _orientations_of_skeleton(names, sorted(skeleton)):
            if cand.is_chain_graph():
                rebuilt.setdefault(find_triplexes(cand), set()).add(cand)
        if rebuilt != expected:
            raise GraphError(
                "census grouping disagrees with per-skeleton class enumeration"
            )


@dataclass(frozen=True)
class CensusReport:
    """Counts of chain graphs and equivalence classes on n labeled vertices."""

    n: int
    total_cgs: int
    total_classes: int
    ratio: Fraction
    class_size_histogram: tuple[tuple[int, int], ...]  # (size, count), ascending

    @property
    def ratio_num(self) -> int:
        return self.ratio.numerator

    @property
    def ratio_den(self) -> int:
        return self.ratio.denominator

    CSV_HEADER = "n,total_cgs,total_classes,ratio_num,ratio_den"

    def to_csv(self) -> str:
        return (
            f"{self.CSV_HEADER}\n"
            f"{self.n},{self.total_cgs},{self.total_classes},"
            f"{self.ratio_num},{self.ratio_den}"
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "total_cgs": self.total_cgs,
                "total_classes": self.total_classes,
                "ratio_num": self.ratio_num,
                "ratio_den": self.ratio_den,
                "ratio": self.total_classes / self.total_cgs,
                "class_size_histogram": {
                    str(size): count for size, count in self.class_size_histogram
                },
            },
            indent=2,
        )


def census(n: int, cap: int = DEFAULT_N_CAP, jobs: int = 1) -> CensusReport:
    """Count chain graphs and equivalence classes on n labeled vertices."""
    _check_n(n, cap)
    groups = _grouped_indices(n, jobs)
    _verify_groups(n, groups)
    total_cgs = sum(len(v) for v in groups.values())
    sizes: dict[int, int] = {}
    for indices in groups.values():
        sizes[len(indices)] = sizes.get(len(indices), 0) + 1
    return CensusReport(
        n=n,
        total_cgs=total_cgs,
        total_classes=len(groups),
        ratio=Fraction(len(groups), total_cgs),
        class_size_histogram=tuple(sorted(sizes.items())),
    )


# -- cross-validation harness --------------------------------------------------


@dataclass(frozen=True)
class Violation:
    prop: str
    subject: str
    detail: str


@dataclass(frozen=True)
class CrossValidationReport:
    n: int
    checked: tuple[tuple[str, int], ...]  # (property, number of subjects)
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class _Context:
    n: int
    graphs: list[MixedGraph]
    classes: list[EquivalenceClass]
    essentials: list[StrengthLabeledGraph]


def _ctx_subject(g: MixedGraph) -> str:
    return repr(g)


def _check_essential_unique_member(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    for cls, ess in zip(ctx.classes, ctx.essentials):
        g = ess.graph
        if not g.is_chain_graph():
            out.append(Violation("essential_unique_member", _ctx_subject(g), "not a chain graph"))
        if g not in cls:
            out.append(Violation("essential_unique_member", _ctx_subject(g), "not a class member"))
        first = cls.members[0]
        if g.skeleton_pairs() != first.skeleton_pairs() or find_triplexes(
            g
        ) != find_triplexes(first):
            out.append(
                Violation("essential_unique_member", _ctx_subject(g), "skeleton or triplexes differ")
            )
    return len(ctx.classes), out


def _induced_states(g: MixedGraph, edges: list[tuple[str, str, EdgeState]]) -> bool:
    return all(g.edge_state(u, v) is s for u, v, s in edges)


def _check_flag_pinning(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for cls, ess in zip(ctx.classes, ctx.essentials):
        for flag in find_flags(ess.graph):
            checked += 1
            a, b, c = flag.vertices
            if ess.strength_of(a, b) is not EdgeStrength.STRONG_ARROW:
                out.append(Violation("flag_pinning", _ctx_subject(ess.graph), f"arrow {a}->{b} not strong"))
            if ess.strength_of(b, c) is not EdgeStrength.STRONG_LINE:
                out.append(Violation("flag_pinning", _ctx_subject(ess.graph), f"line {b}--{c} not strong"))
            wanted = [(a, b, EdgeState.FORWARD), (b, c, EdgeState.LINE)]
            if not all(_induced_states(m, wanted) for m in cls):
                out.append(Violation("flag_pinning", _ctx_subject(ess.graph), f"flag {flag} not in every member"))
    return checked, out


def _check_strong_motif_edges(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for cls, ess in zip(ctx.classes, ctx.essentials):
        g = ess.graph
        motif_edges: list[list[tuple[str, str, EdgeState]]] = []
        for bf in find_biflags(g):
            edges = [
                (bf.spine[i], bf.spine[i + 1], EdgeState.LINE)
                for i in range(len(bf.spine) - 1)
            ]
            for p in bf.parents:
                for c in bf.spine:
                    if g.edge_state(p, c) is EdgeState.FORWARD:
                        edges.append((p, c, EdgeState.FORWARD))
            motif_edges.append(edges)
        for cycle in find_chordless_undirected_cycles(g):
            closed = cycle + (cycle[0],)
            motif_edges.append(
                [
                    (closed[i], closed[i + 1], EdgeState.LINE)
                    for i in range(len(cycle))
                ]
            )
        for edges in motif_edges:
            checked += 1
            for u, v, s in edges:
                if not ess.strength_of(u, v).is_strong:
                    out.append(Violation("strong_motif_edges", _ctx_subject(g), f"edge {u},{v} not strong"))
            if not all(_induced_states(m, edges) for m in cls):
                out.append(Violation("strong_motif_edges", _ctx_subject(g), "motif not in every member"))
    return checked, out


def _check_weak_line_blocks(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for ess in ctx.essentials:
        g = ess.graph
        sigma = strong_equivalence_classes(ess)
        for u, v in g.lines():
            if ess.strength_of(u, v) is not EdgeStrength.WEAK_LINE:
                continue
            checked += 1
            alpha, beta = sigma.block_of(u), sigma.block_of(v)
            for a in alpha:
                for b in beta:
                    s = g.edge_state(a, b)
                    if s is EdgeState.ABSENT:
                        continue
                    if s is not EdgeState.LINE or ess.strength_of(a, b) is not EdgeStrength.WEAK_LINE:
                        out.append(
                            Violation("weak_line_blocks", _ctx_subject(g), f"pair {a},{b} not a weak line")
                        )
            for blk in (alpha, beta):
                if not g.is_complete(blk):
                    out.append(Violation("weak_line_blocks", _ctx_subject(g), f"block {sorted(blk)} not complete"))
    return checked, out


def _check_reduced_graph_shape(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    for ess in ctx.essentials:
        reduced = reduced_graph(ess, strong_equivalence_classes(ess))
        if find_flags(reduced):
            out.append(Violation("reduced_graph_shape", _ctx_subject(ess.graph), "reduced graph has a flag"))
        if find_chordless_undirected_cycles(reduced, limit=1):
            out.append(
                Violation("reduced_graph_shape", _ctx_subject(ess.graph), "reduced graph has a chordless cycle")
            )
    return len(ctx.essentials), out


def _check_component_dichotomy(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for ess in ctx.essentials:
        g = ess.graph
        classes = classify_chain_components(g)
        for block in g.chain_components():
            if len(block) < 2:
                continue
            checked += 1
            sub = g.induced_subgraph(block)
            strengths = {ess.strength_of(u, v) for u, v in sub.lines()}
            if len(strengths) != 1:
                out.append(Violation("component_dichotomy", _ctx_subject(g), f"mixed strengths in {sorted(block)}"))
                continue
            class_strong = strengths == {EdgeStrength.STRONG_LINE}
            label_strong = classes[block] is ComponentClass.STRONG
            if class_strong != label_strong:
                out.append(
                    Violation(
                        "component_dichotomy",
                        _ctx_subject(g),
                        f"classification disagrees with class strength on {sorted(block)}",
                    )
                )
            if class_strong:
                closure = g.induced_subgraph(g.closure_set(block))
                if is_chordal(g.induced_subgraph(block)) and not find_biflags(closure):
                    out.append(
                        Violation(
                            "component_dichotomy",
                            _ctx_subject(g),
                            f"strong component {sorted(block)} has no chordless cycle or biflag",
                        )
                    )
    return checked, out


def _check_adg_criterion(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    for cls, ess in zip(ctx.classes, ctx.essentials):
        g = ess.graph
        member = class_contains_adg(cls)
        components_chordal = all(
            is_chordal(g.induced_subgraph(b)) for b in g.chain_components()
        )
        criterion = not find_biflags(g) and components_chordal
        if (member is not None) != criterion:
            out.append(
                Violation(
                    "adg_criterion",
                    _ctx_subject(g),
                    f"directed member {'exists' if member else 'missing'} but criterion says otherwise",
                )
            )
        elif member is not None and adg_essential_graph(member).graph != g:
            out.append(Violation("adg_criterion", _ctx_subject(g), "directed-class union differs"))
    return len(ctx.classes), out


def _check_arrows_well_protected(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for ess in ctx.essentials:
        g = ess.graph
        for t, h in g.arrows():
            checked += 1
            if not is_well_protected_arrow(g, t, h):
                out.append(Violation("arrows_well_protected", _ctx_subject(g), f"arrow {t}->{h}"))
    return checked, out


def _check_strong_components_satisfy_s(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for ess in ctx.essentials:
        g = ess.graph
        for block, cls in classify_chain_components(g).items():
            if cls is not ComponentClass.STRONG:
                continue
            checked += 1
            ok, witness = property_s(g, block)
            if not ok:
                out.append(
                    Violation("strong_components_satisfy_s", _ctx_subject(g), f"violated at {witness}")
                )
    return checked, out


def _check_protected_equals_irreversible(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for g in ctx.graphs:
        for t, h in g.arrows():
            checked += 1
            if is_protected_arrow(g, t, h) != is_irreversible_arrow(g, t, h):
                out.append(
                    Violation("protected_equals_irreversible", _ctx_subject(g), f"arrow {t}->{h}")
                )
    return checked, out


def _check_s_equals_s_prime(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for g in ctx.graphs:
        for block in g.chain_components():
            if len(block) < 2:
                continue
            checked += 1
            if property_s(g, block)[0] != property_s_prime(g, block)[0]:
                out.append(Violation("s_equals_s_prime", _ctx_subject(g), f"component {sorted(block)}"))
    return checked, out


def _check_validator_sound(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    for ess in ctx.essentials:
        verdict = validate_essential(ess.graph)
        if not verdict.is_essential:
            detail = "; ".join(f.describe() for f in verdict.failures)
            out.append(Violation("validator_sound", _ctx_subject(ess.graph), detail))
    return len(ctx.essentials), out


def _check_validator_complete(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    essentials = {ess.graph for ess in ctx.essentials}
    for g in ctx.graphs:
        accepted = validate_essential(g).is_essential
        if accepted and g not in essentials:
            out.append(Violation("validator_complete", _ctx_subject(g), "accepted non-essential graph"))
        if not accepted and g in essentials:
            out.append(Violation("validator_complete", _ctx_subject(g), "rejected an essential graph"))
    return len(ctx.graphs), out


def _check_directed_agreement(ctx: _Context) -> tuple[int, list[Violation]]:
    out = []
    checked = 0
    for g in ctx.graphs:
        if not g.is_directed():
            continue
        checked += 1
        fast = validate_directed_essential(g)
        general = validate_essential(g).is_essential
        fixed_point = adg_essential_graph(g).graph == g
        if not fast == general == fixed_point:
            out.append(
                Violation(
                    "directed_agreement",
                    _ctx_subject(g),
                    f"directed={fast} general={general} union-fixed-point={fixed_point}",
                )
            )
    return checked, out


_PROPERTY_CHECKS: dict[str, Callable[[_Context], tuple[int, list[Violation]]]] = {
    "essential_unique_member": _check_essential_unique_member,
    "flag_pinning": _check_flag_pinning,
    "strong_motif_edges": _check_strong_motif_edges,
    "weak_line_blocks": _check_weak_line_blocks,
    "reduced_graph_shape": _check_reduced_graph_shape,
    "component_dichotomy": _check_component_dichotomy,
    "adg_criterion": _check_adg_criterion,
    "arrows_well_protected": _check_arrows_well_protected,
    "strong_components_satisfy_s": _check_strong_components_satisfy_s,
    "protected_equals_irreversible": _check_protected_equals_irreversible,
    "s_equals_s_prime": _check_s_equals_s_prime,
    "validator_sound": _check_validator_sound,
    "validator_complete": _check_validator_complete,
    "directed_agreement": _check_directed_agreement,
}

ALL_PROPERTIES = tuple(_PROPERTY_CHECKS)


def cross_validate(
    n: int,
    properties: Iterable[str] | None = None,
    cap: int = DEFAULT_N_CAP,
    jobs: int = 1,
) -> CrossValidationReport:
    """Run the selected invariant suites over every chain graph on n vertices.

    Violations are returned as data; an empty report means every selected
    property held everywhere.
    """
    _check_n(n, cap)
    selected = tuple(properties) if properties is not None else ALL_PROPERTIES
    for name in selected:
        if name not in _PROPERTY_CHECKS:
            raise GraphError(f"unknown property {name!r}")
    classes = equivalence_classes(n, cap=cap, jobs=jobs)
    ctx = _Context(
        n=n,
        graphs=[g for cls in classes for g in cls.members],
        classes=classes,
        essentials=[essential_graph(cls) for cls in classes],
    )
    checked: list[tuple[str, int]] = []
    violations: list[Violation] = []
    for name in selected:
        count, found = _PROPERTY_CHECKS[name](ctx)
        checked.append((name, count))
        violations.extend(found)
    return CrossValidationReport(n=n, checked=tuple(checked), violations=tuple(violations))
