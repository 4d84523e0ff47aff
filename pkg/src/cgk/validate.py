"""Intrinsic validation of essential graphs.

A chain graph is an essential graph exactly when (G1) it has no semi-directed
cycle, (G2) the closure of every strong chain component satisfies the
covering-neighbor property S, and (G3) every arrow sits in one of eight
protecting configurations.  Strong components are recognized intrinsically:
a nontrivial chain component is strong when its closure contains a chordless
undirected cycle or a flag, and its lines are then called strong.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .core import EdgeState, GraphError, MixedGraph
from .patterns import find_flags, find_triplexes, is_chordal


class ComponentClass(Enum):
    STRONG = "strong"
    WEAK = "weak"
    TRIVIAL = "trivial"


def classify_chain_components(g: MixedGraph) -> dict[frozenset[str], ComponentClass]:
    """Classify every chain component as strong, weak, or trivial.

    Trivial components are singletons.  A nontrivial component is strong iff
    the subgraph induced by the component plus its parents contains a
    chordless undirected cycle or a flag; the cycle test reduces to
    non-chordality of the component's own line graph, since all lines of the
    closure lie inside the component.
    """
    if not g.is_chain_graph():
        raise GraphError("component classification needs a chain graph")
    out: dict[frozenset[str], ComponentClass] = {}
    for block in g.chain_components():
        if len(block) == 1:
            out[block] = ComponentClass.TRIVIAL
            continue
        if not is_chordal(g.induced_subgraph(block)):
            out[block] = ComponentClass.STRONG
            continue
        closure = g.induced_subgraph(g.closure_set(block))
        out[block] = (
            ComponentClass.STRONG if find_flags(closure) else ComponentClass.WEAK
        )
    return out


def strong_components(g: MixedGraph) -> frozenset[frozenset[str]]:
    """The strong chain components of a chain graph."""
    return frozenset(
        blk
        for blk, cls in classify_chain_components(g).items()
        if cls is ComponentClass.STRONG
    )


DEFAULT_COMPONENT_CAP = 16


@dataclass(frozen=True)
class SPropertyWitness:
    """A violating pair for property S or S': the complete set and the
    connected covering-neighbor part that has nowhere else to go."""

    alpha: tuple[str, ...]
    kappa: tuple[str, ...]


def _component_scaffold(
    g: MixedGraph, component: Iterable[str], cap: int
) -> tuple[frozenset[str], MixedGraph, MixedGraph]:
    xi = frozenset(component)
    if xi not in set(g.chain_components()):
        raise GraphError(f"{sorted(xi)} is not a chain component")
    if len(xi) < 2:
        raise GraphError("property applies to nontrivial components only")
    if len(xi) > cap:
        raise GraphError(f"component larger than the cap of {cap}")
    g_xi = g.induced_subgraph(xi)
    g_bar = g.induced_subgraph(g.closure_set(xi))
    return xi, g_xi, g_bar


def _nonempty_proper_subsets(xi: frozenset[str]) -> list[tuple[str, ...]]:
    vs = sorted(xi)
    subsets = [
        tuple(c) for r in range(1, len(vs)) for c in combinations(vs, r)
    ]
    subsets.sort()
    return subsets


def property_s(
    g: MixedGraph, component: Iterable[str], cap: int = DEFAULT_COMPONENT_CAP
) -> tuple[bool, SPropertyWitness | None]:
    """Property S on the closure of a nontrivial chain component.

    For every nonempty complete subset alpha of the component whose covering
    neighbors kappa are nonempty, each connected part of kappa must either
    have a neighbor outside alpha, or alpha must have a parent that does not
    cover the part.  Returns the lexicographically least violating pair.
    """
    xi, g_xi, g_bar = _component_scaffold(g, component, cap)
    for alpha in _nonempty_proper_subsets(xi):
        if not g_xi.is_complete(alpha):
            continue
        kappa = g_xi.covering_neighbors(alpha)
        if not kappa:
            continue
        alpha_set = frozenset(alpha)
        pa_alpha = g_bar.parents(alpha)
        for part in g_xi.induced_subgraph(kappa).chain_components():
            if g_xi.neighbors(part) - alpha_set:
                continue
            if pa_alpha - g_bar.covering_parents(part):
                continue
            return False, SPropertyWitness(alpha, tuple(sorted(part)))
    return True, None


def property_s_prime(
    g: MixedGraph, component: Iterable[str], cap: int = DEFAULT_COMPONENT_CAP
) -> tuple[bool, SPropertyWitness | None]:
    """Property S' on the closure of a nontrivial chain component.

    For every nonempty connected proper subset kappa whose covering-neighbor
    set alpha is nonempty and complete, kappa must have a noncovering
    neighbor, or alpha must have a parent that does not cover kappa.
    """
    xi, g_xi, g_bar = _component_scaffold(g, component, cap)
    for kappa in _nonempty_proper_subsets(xi):
        if len(g_xi.induced_subgraph(kappa).chain_components()) != 1:
            continue
        alpha = g_xi.covering_neighbors(kappa)
        if not alpha or not g_xi.is_complete(alpha):
            continue
        if g_xi.noncovering_neighbors(kappa):
            continue
        if g_bar.parents(alpha) - g_bar.covering_parents(kappa):
            continue
        return False, SPropertyWitness(tuple(sorted(alpha)), kappa)
    return True, None


# -- arrow protection ---------------------------------------------------------


def _require_arrow(g: MixedGraph, tail: str, head: str) -> None:
    state = g.edge_state(tail, head)
    if state is EdgeState.ABSENT:
        raise GraphError(f"no edge between {tail!r} and {head!r}")
    if state is not EdgeState.FORWARD:
        raise GraphError(f"edge {tail!r}, {head!r} is not the arrow {tail} -> {head}")


def is_irreversible_arrow(g: MixedGraph, tail: str, head: str) -> bool:
    """True iff reversing the arrow changes the triplex set or creates a
    semi-directed cycle."""
    _require_arrow(g, tail, head)
    reversed_g = g.with_edge(tail, head, EdgeState.BACKWARD)
    if not reversed_g.is_chain_graph():
        return True
    return find_triplexes(reversed_g) != find_triplexes(g)


def is_protected_arrow(g: MixedGraph, tail: str, head: str) -> bool:
    """True iff the arrow occurs in one of the seven protecting shapes.

    With a = tail, b = head, some third vertex c realizes one of:
    c -> a -> b (c,b nonadjacent); a -> b <- c (a,c nonadjacent);
    a -> c -> b; a -- c -> b; c -- a -> b (c,b nonadjacent);
    a -> b -- c (a,c nonadjacent); a -> c -- b.  All induced.
    """
    _require_arrow(g, tail, head)
    a, b = tail, head
    for c in g.vertices:
        if c == a or c == b:
            continue
        ca = g.edge_state(c, a)
        cb = g.edge_state(c, b)
        if ca is EdgeState.FORWARD and cb is EdgeState.ABSENT:
            return True  # c -> a -> b
        if cb is EdgeState.FORWARD and ca is EdgeState.ABSENT:
            return True  # a -> b <- c
        if ca is EdgeState.BACKWARD and cb is EdgeState.FORWARD:
            return True  # a -> c -> b
        if ca is EdgeState.LINE and cb is EdgeState.FORWARD:
            return True  # a -- c -> b
        if ca is EdgeState.LINE and cb is EdgeState.ABSENT:
            return True  # c -- a -> b
        if cb is EdgeState.LINE and ca is EdgeState.ABSENT:
            return True  # a -> b -- c
        if ca is EdgeState.BACKWARD and cb is EdgeState.LINE:
            return True  # a -> c -- b
    return False


def is_well_protected_arrow(
    g: MixedGraph,
    tail: str,
    head: str,
    strong_blocks: Iterable[frozenset[str]] | None = None,
) -> bool:
    """True iff the arrow occurs in one of the eight well-protecting shapes.

    The first three shapes are the arrow-only protecting shapes; the pair
    shape adds an immorality into the head with both its tails line-joined
    to the tail; the remaining four are the line-involving protecting shapes
    with the line required strong.  Line strength comes from the component
    classification of ``g`` itself unless ``strong_blocks`` is supplied.
    """
    _require_arrow(g, tail, head)
    if strong_blocks is None:
        strong_blocks = strong_components(g)
    strong_set = set(strong_blocks)
    parts = g.chain_components()

    def strong_line(x: str, y: str) -> bool:
        return (
            g.edge_state(x, y) is EdgeState.LINE
            and parts.block_of(x) in strong_set
        )

    a, b = tail, head
    into_b_over_lines_to_a: list[str] = []
    for c in g.vertices:
        if c == a or c == b:
            continue
        ca = g.edge_state(c, a)
        cb = g.edge_state(c, b)
        if ca is EdgeState.FORWARD and cb is EdgeState.ABSENT:
            return True  # c -> a -> b
        if cb is EdgeState.FORWARD and ca is EdgeState.ABSENT:
            return True  # a -> b <- c
        if ca is EdgeState.BACKWARD and cb is EdgeState.FORWARD:
            return True  # a -> c -> b
        if cb is EdgeState.FORWARD and ca is EdgeState.LINE:
            if strong_line(a, c):
                return True  # a --s c -> b
            into_b_over_lines_to_a.append(c)
        if ca is EdgeState.LINE and cb is EdgeState.ABSENT and strong_line(c, a):
            return True  # c --s a -> b
        if cb is EdgeState.LINE and ca is EdgeState.ABSENT and strong_line(b, c):
            return True  # a -> b --s c
        if ca is EdgeState.BACKWARD and cb is EdgeState.LINE and strong_line(c, b):
            return True  # a -> c --s b
    for c, d in combinations(into_b_over_lines_to_a, 2):
        if not g.adjacent(c, d):
            return True  # c -> b <- d with c -- a -- d
    return False


# -- the validator -------------------------------------------------------------


@dataclass(frozen=True)
class ValidationFailure:
    """One violated condition with a witness.

    G1 carries an arrow lying on a semi-directed cycle, G2 a triple of
    (component, alpha, kappa), G3 an unprotected arrow.
    """

    condition: str
    witness: tuple

    def describe(self) -> str:
        if self.condition == "G1":
            t, h = self.witness
            return f"G1: arrow {t} -> {h} lies on a semi-directed cycle"
        if self.condition == "G2":
            comp, alpha, kappa = self.witness
            return (
                f"G2: component {{{', '.join(comp)}}} fails property S at "
                f"alpha {{{', '.join(alpha)}}}, kappa {{{', '.join(kappa)}}}"
            )
        t, h = self.witness
        return f"G3: arrow {t} -> {h} is not well protected"


@dataclass(frozen=True)
class ValidationVerdict:
    is_essential: bool
    failures: tuple[ValidationFailure, ...]


def validate_essential(
    g: MixedGraph, component_cap: int = DEFAULT_COMPONENT_CAP
) -> ValidationVerdict:
    """Decide whether a mixed graph is an essential graph, with diagnostics.

    Checks, in order: no semi-directed cycles; property S on the closure of
    every strong chain component; well protection of every arrow.
    """
    if not g.is_chain_graph():
        witness = next(
            (t, h) for t, h in g.arrows() if g.arrow_on_semi_directed_cycle(t, h)
        )
        return ValidationVerdict(False, (ValidationFailure("G1", witness),))
    failures: list[ValidationFailure] = []
    classes = classify_chain_components(g)
    strong_blocks = frozenset(
        blk for blk, cls in classes.items() if cls is ComponentClass.STRONG
    )
    for block in g.chain_components():
        if block not in strong_blocks:
            continue
        ok, witness = property_s(g, block, cap=component_cap)
        if not ok:
            assert witness is not None
            failures.append(
                ValidationFailure(
                    "G2", (tuple(sorted(block)), witness.alpha, witness.kappa)
                )
            )
    for t, h in g.arrows():
        if not is_well_protected_arrow(g, t, h, strong_blocks):
            failures.append(ValidationFailure("G3", (t, h)))
    return ValidationVerdict(not failures, tuple(failures))


def validate_directed_essential(d: MixedGraph) -> bool:
    """Essentiality test specialized to fully directed graphs.

    A directed graph is an essential graph iff it is acyclic and every arrow
    occurs in one of the three arrow-only protecting shapes; on directed
    input the line-involving shapes are vacuous, so the plain protection
    test decides this.
    """
    if not d.is_directed():
        raise GraphError("directed validation requires a fully directed graph")
    if not d.is_chain_graph():
        return False
    return all(is_protected_arrow(d, t, h) for t, h in d.arrows())
