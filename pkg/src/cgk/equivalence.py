"""AMP Markov equivalence of chain graphs and brute-force essential graphs.

Two chain graphs on one vertex set are AMP Markov equivalent iff they share
skeleton and triplex set.  The essential graph of an equivalence class keeps
an arrow exactly where every member agrees on its absence of reversal, turns
everything else into a line, and labels each edge strong (fixed across the
class) or weak (varying).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator

from .core import EdgeState, GraphError, MixedGraph, VertexPartition
from .patterns import find_immoralities, find_triplexes

DEFAULT_EDGE_CAP = 12


class EdgeStrength(Enum):
    STRONG_LINE = "strong-line"
    WEAK_LINE = "weak-line"
    STRONG_ARROW = "strong-arrow"
    WEAK_ARROW = "weak-arrow"

    @property
    def is_strong(self) -> bool:
        return self in (EdgeStrength.STRONG_LINE, EdgeStrength.STRONG_ARROW)

    @property
    def is_line(self) -> bool:
        return self in (EdgeStrength.STRONG_LINE, EdgeStrength.WEAK_LINE)

    @property
    def marker(self) -> str:
        return "s" if self.is_strong else "w"


@dataclass(frozen=True)
class EquivalenceClass:
    """The chain graphs sharing one skeleton and one triplex set."""

    members: tuple[MixedGraph, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise GraphError("equivalence class may not be empty")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[MixedGraph]:
        return iter(self.members)

    def __contains__(self, g: object) -> bool:
        return g in self.members


class StrengthLabeledGraph:
    """A mixed graph whose every edge carries a strong/weak annotation."""

    def __init__(self, graph: MixedGraph, strengths: dict[tuple[str, str], EdgeStrength]):
        for (u, v), strength in strengths.items():
            state = graph.edge_state(u, v)
            if state is EdgeState.ABSENT:
                raise GraphError(f"strength given for absent edge {(u, v)}")
            if (state is EdgeState.LINE) != strength.is_line:
                raise GraphError(f"strength kind mismatch on {(u, v)}")
        missing = graph.skeleton_pairs() - strengths.keys()
        if missing:
            raise GraphError(f"unlabeled edges: {sorted(missing)}")
        self.graph = graph
        self.strengths = dict(strengths)

    def strength_of(self, u: str, v: str) -> EdgeStrength:
        if self.graph.edge_state(u, v) is EdgeState.ABSENT:
            raise GraphError(f"no edge between {u!r} and {v!r}")
        return self.strengths[(u, v) if u < v else (v, u)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrengthLabeledGraph):
            return NotImplemented
        return self.graph == other.graph and self.strengths == other.strengths

    def __hash__(self) -> int:
        return hash((self.graph, frozenset(self.strengths.items())))

    def __repr__(self) -> str:
        return f"StrengthLabeledGraph({self.graph!r})"


def amp_equivalent(g1: MixedGraph, g2: MixedGraph) -> bool:
    """Same skeleton and same triplexes, for chain graphs on one vertex set."""
    if g1.vertices != g2.vertices:
        raise GraphError("equivalence requires a common vertex set")
    for g in (g1, g2):
        if not g.is_chain_graph():
            raise GraphError("equivalence is defined for chain graphs only")
    return g1.skeleton_pairs() == g2.skeleton_pairs() and find_triplexes(
        g1
    ) == find_triplexes(g2)


_ORIENTATIONS = (EdgeState.LINE, EdgeState.FORWARD, EdgeState.BACKWARD)


def _orientations_of_skeleton(
    vertices: tuple[str, ...], pairs: list[tuple[str, str]]
) -> Iterator[MixedGraph]:
    # Lexicographic over edge-state vectors, line < forward < backward.
    for states in product(_ORIENTATIONS, repeat=len(pairs)):
        yield MixedGraph._make(vertices, dict(zip(pairs, states)))


def enumerate_class(g: MixedGraph, cap: int = DEFAULT_EDGE_CAP) -> EquivalenceClass:
    """All chain graphs with the skeleton and triplex set of ``g``.

    Tries every line/arrow assignment over the skeleton, so the skeleton may
    have at most ``cap`` edges.  Members come out in lexicographic order of
    their edge-state vectors (line < forward < backward).
    """
    if not g.is_chain_graph():
        raise GraphError("class enumeration needs a chain graph seed")
    pairs = sorted(g.skeleton_pairs())
    if len(pairs) > cap:
        raise GraphError(
            f"skeleton has {len(pairs)} edges, above the cap of {cap}"
        )
    target = find_triplexes(g)
    members = tuple(
        cand
        for cand in _orientations_of_skeleton(g.vertices, pairs)
        if cand.is_chain_graph() and find_triplexes(cand) == target
    )
    return EquivalenceClass(members)


def essential_graph(cls: EquivalenceClass) -> StrengthLabeledGraph:
    """The unique representative of the class, with strong/weak labels.

    Per skeleton edge: an arrow if some member carries it and no member
    carries the reverse, otherwise a line.  An arrow is strong when every
    member carries it; a line is strong when every member carries it.
    """
    first = cls.members[0]
    state: dict[tuple[str, str], EdgeState] = {}
    strengths: dict[tuple[str, str], EdgeStrength] = {}
    for pair in sorted(first.skeleton_pairs()):
        u, v = pair
        has_fwd = has_back = has_line = False
        for member in cls.members:
            s = member.edge_state(u, v)
            if s is EdgeState.FORWARD:
                has_fwd = True
            elif s is EdgeState.BACKWARD:
                has_back = True
            else:
                has_line = True
        if has_fwd and not has_back:
            state[pair] = EdgeState.FORWARD
            strengths[pair] = (
                EdgeStrength.WEAK_ARROW if has_line else EdgeStrength.STRONG_ARROW
            )
        elif has_back and not has_fwd:
            state[pair] = EdgeState.BACKWARD
            strengths[pair] = (
                EdgeStrength.WEAK_ARROW if has_line else EdgeStrength.STRONG_ARROW
            )
        elif has_fwd and has_back:
            state[pair] = EdgeState.LINE
            strengths[pair] = EdgeStrength.WEAK_LINE
        else:
            state[pair] = EdgeState.LINE
            strengths[pair] = EdgeStrength.STRONG_LINE
    return StrengthLabeledGraph(MixedGraph._make(first.vertices, state), strengths)


def essential_graph_of(g: MixedGraph, cap: int = DEFAULT_EDGE_CAP) -> StrengthLabeledGraph:
    """Convenience: the essential graph of the class containing ``g``."""
    return essential_graph(enumerate_class(g, cap))


def strength_parent_sets(
    labeled: StrengthLabeledGraph, subset: Iterable[str]
) -> tuple[frozenset[str], frozenset[str]]:
    """Parents of the set split by the strength of a witnessing arrow.

    A vertex that is a strong parent of one member and a weak parent of
    another appears in both sets.
    """
    g = labeled.graph
    sub = g._subset(subset)
    strong: set[str] = set()
    weak: set[str] = set()
    for b in sub:
        for p in g.parents_of(b):
            if p in sub:
                continue
            if labeled.strength_of(p, b) is EdgeStrength.STRONG_ARROW:
                strong.add(p)
            else:
                weak.add(p)
    return frozenset(strong), frozenset(weak)


def strong_equivalence_classes(labeled: StrengthLabeledGraph) -> VertexPartition:
    """Connected components of the strong-line subgraph, singletons included."""
    g = labeled.graph
    strong_lines = [
        (u, v)
        for u, v in g.lines()
        if labeled.strength_of(u, v) is EdgeStrength.STRONG_LINE
    ]
    return MixedGraph(g.vertices, lines=strong_lines).chain_components()


def reduced_graph(
    labeled: StrengthLabeledGraph, partition: VertexPartition
) -> MixedGraph:
    """The quotient of the graph over the partition blocks.

    Blocks become vertices named by their least member.  Two blocks are
    joined by an arrow when some cross pair carries that arrow, by a line
    when some cross pair carries a line; mixed orientations between two
    blocks mean the input was not an essential graph and raise an error.
    """
    g = labeled.graph
    names = {blk: min(blk) for blk in partition.blocks}
    seen: dict[tuple[str, str], set[EdgeState]] = {}
    for u, v, s in g.edges():
        bu, bv = partition.block_of(u), partition.block_of(v)
        if bu == bv:
            continue
        nu, nv = names[bu], names[bv]
        pair = (nu, nv) if nu < nv else (nv, nu)
        rel = s if nu < nv else s.flipped()
        seen.setdefault(pair, set()).add(rel)
    state: dict[tuple[str, str], EdgeState] = {}
    for pair, states in sorted(seen.items()):
        if len(states) > 1:
            raise GraphError(
                f"blocks {pair} joined by conflicting edge kinds; "
                "input is not an essential graph"
            )
        state[pair] = next(iter(states))
    return MixedGraph._make(tuple(sorted(names.values())), state)


def class_contains_adg(cls: EquivalenceClass) -> MixedGraph | None:
    """Some fully directed member of the class, if one exists."""
    for member in cls.members:
        if member.is_directed():
            return member
    return None


def adg_essential_graph(
    d: MixedGraph, cap: int = DEFAULT_EDGE_CAP
) -> StrengthLabeledGraph:
    """The classical essential graph of an acyclic fully directed graph.

    Enumerates every acyclic orientation of the skeleton with the same
    immoralities and takes the edge union: a common arrow stays an arrow
    (strong); an edge oriented both ways becomes a (weak) line.
    """
    if not d.is_directed():
        raise GraphError("input must be fully directed")
    if not d.is_chain_graph():
        raise GraphError("input must be acyclic")
    pairs = sorted(d.skeleton_pairs())
    if len(pairs) > cap:
        raise GraphError(f"skeleton has {len(pairs)} edges, above the cap of {cap}")
    target = frozenset(find_immoralities(d))
    state: dict[tuple[str, str], EdgeState] = {}
    strengths: dict[tuple[str, str], EdgeStrength] = {}
    seen_fwd: set[tuple[str, str]] = set()
    seen_back: set[tuple[str, str]] = set()
    for states in product((EdgeState.FORWARD, EdgeState.BACKWARD), repeat=len(pairs)):
        cand = MixedGraph._make(d.vertices, dict(zip(pairs, states)))
        if not cand.is_chain_graph():
            continue
        if frozenset(find_immoralities(cand)) != target:
            continue
        for pair, s in zip(pairs, states):
            (seen_fwd if s is EdgeState.FORWARD else seen_back).add(pair)
    for pair in pairs:
        if pair in seen_fwd and pair in seen_back:
            state[pair] = EdgeState.LINE
            strengths[pair] = EdgeStrength.WEAK_LINE
        elif pair in seen_fwd:
            state[pair] = EdgeState.FORWARD
            strengths[pair] = EdgeStrength.STRONG_ARROW
        else:
            state[pair] = EdgeState.BACKWARD
            strengths[pair] = EdgeStrength.STRONG_ARROW
    return StrengthLabeledGraph(MixedGraph._make(d.vertices, state), strengths)
