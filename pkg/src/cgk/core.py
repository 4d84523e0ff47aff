"""Mixed graphs (lines + arrows) and the chain-graph primitives built on them.

A mixed graph keeps exactly one state per unordered vertex pair: no edge, an
undirected line ``u -- v``, or an arrow ``u -> v`` in one direction.  Graphs
are immutable values; every operation returns a new graph.  Vertex labels are
opaque tokens ordered lexicographically, and all iteration follows that
canonical order, so results are reproducible across runs and worker counts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """A structurally invalid graph, vertex, subset, or query."""


class EdgeState(Enum):
    """State of the edge between an ordered vertex pair ``(u, v)``."""

    ABSENT = "absent"
    LINE = "line"
    FORWARD = "forward"    # u -> v
    BACKWARD = "backward"  # v -> u

    def flipped(self) -> EdgeState:
        """The same edge seen from the opposite vertex order."""
        if self is EdgeState.FORWARD:
            return EdgeState.BACKWARD
        if self is EdgeState.BACKWARD:
            return EdgeState.FORWARD
        return self

    @property
    def is_arrow(self) -> bool:
        return self is EdgeState.FORWARD or self is EdgeState.BACKWARD


# Substrings that would collide with the text-format grammar; keeping them out
# of labels is what makes parse(render(G)) == G hold for every valid graph.
_LABEL_FORBIDDEN = ("--", "->", "#", "[", "]")
_LABEL_RESERVED = frozenset({"node"})


def check_label(label: str) -> str:
    """Validate a vertex label, returning it unchanged."""
    if not isinstance(label, str) or not label:
        raise GraphError(f"vertex label must be a nonempty string, got {label!r}")
    if any(ch.isspace() for ch in label):
        raise GraphError(f"vertex label may not contain whitespace: {label!r}")
    for sub in _LABEL_FORBIDDEN:
        if sub in label:
            raise GraphError(f"vertex label may not contain {sub!r}: {label!r}")
    if label in _LABEL_RESERVED:
        raise GraphError(f"vertex label {label!r} is reserved")
    return label


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty vertex blocks covering a vertex set.

    Blocks are ordered by their least vertex label.
    """

    blocks: tuple[frozenset[str], ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, blk in enumerate(self.blocks) for v in blk}

    def block_of(self, v: str) -> frozenset[str]:
        try:
            return self.blocks[self._index[v]]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def index_of(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.blocks)


_BOUNDARY_KINDS = (
    "parents",
    "neighbors",
    "covering_neighbors",
    "covering_parents",
    "noncovering_neighbors",
    "closure_set",
)


class MixedGraph:
    """An immutable mixed graph over lexicographically ordered vertex labels.

    ``lines`` is an iterable of unordered pairs, ``arrows`` an iterable of
    ``(tail, head)`` pairs.  At most one edge may exist per vertex pair.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        lines: Iterable[tuple[str, str]] = (),
        arrows: Iterable[tuple[str, str]] = (),
    ):
        vs = tuple(sorted(set(vertices)))
        for v in vs:
            check_label(v)
        vset = frozenset(vs)
        state: dict[tuple[str, str], EdgeState] = {}

        def add(u: str, v: str, fwd_state: EdgeState) -> None:
            if u == v:
                raise GraphError(f"self-edge on {u!r}")
            if u not in vset or v not in vset:
                missing = u if u not in vset else v
                raise GraphError(f"unknown vertex {missing!r}")
            pair = _pair(u, v)
            if pair in state:
                raise GraphError(f"duplicate edge for pair {pair}")
            state[pair] = fwd_state if (u, v) == pair else fwd_state.flipped()

        for u, v in lines:
            add(u, v, EdgeState.LINE)
        for t, h in arrows:
            add(t, h, EdgeState.FORWARD)

        self._vertices = vs
        self._state = state

    @classmethod
    def _make(
        cls, vertices: tuple[str, ...], state: dict[tuple[str, str], EdgeState]
    ) -> MixedGraph:
        # Fast path for internal construction: inputs already canonical.
        g = cls.__new__(cls)
        g._vertices = vertices
        g._state = state
        return g

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._state == other._state

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._state.items())))

    def __repr__(self) -> str:
        atoms = []
        incident: set[str] = set()
        for (u, v), s in sorted(self._state.items()):
            incident.update((u, v))
            if s is EdgeState.LINE:
                atoms.append(f"{u} -- {v}")
            elif s is EdgeState.FORWARD:
                atoms.append(f"{u} -> {v}")
            else:
                atoms.append(f"{v} -> {u}")
        atoms.extend(f"node {v}" for v in self._vertices if v not in incident)
        return f"MixedGraph({'; '.join(atoms)})"

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self._vertices)

    def _require(self, v: str) -> None:
        if v not in self.vertex_set:
            raise GraphError(f"unknown vertex {v!r}")

    def edge_state(self, u: str, v: str) -> EdgeState:
        """The edge state relative to the query order (u, v)."""
        if u == v:
            raise GraphError(f"edge query with identical endpoints {u!r}")
        self._require(u)
        self._require(v)
        s = self._state.get(_pair(u, v), EdgeState.ABSENT)
        return s if u < v else s.flipped()

    def adjacent(self, u: str, v: str) -> bool:
        return self.edge_state(u, v) is not EdgeState.ABSENT

    def edges(self) -> Iterator[tuple[str, str, EdgeState]]:
        """Non-absent edges as (u, v, state) with u < v, in canonical order."""
        for (u, v) in sorted(self._state):
            yield u, v, self._state[(u, v)]

    def arrows(self) -> list[tuple[str, str]]:
        """All arrows as (tail, head), in canonical pair order."""
        out = []
        for u, v, s in self.edges():
            if s is EdgeState.FORWARD:
                out.append((u, v))
            elif s is EdgeState.BACKWARD:
                out.append((v, u))
        return out

    def lines(self) -> list[tuple[str, str]]:
        """All lines as (u, v) with u < v, in canonical pair order."""
        return [(u, v) for u, v, s in self.edges() if s is EdgeState.LINE]

    @property
    def edge_count(self) -> int:
        return len(self._state)

    def is_undirected(self) -> bool:
        return all(s is EdgeState.LINE for s in self._state.values())

    def is_directed(self) -> bool:
        return all(s is not EdgeState.LINE for s in self._state.values())

    # -- adjacency maps (cached; graphs are immutable) ----------------------

    @cached_property
    def _line_adj(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self._vertices}
        for (u, v), s in self._state.items():
            if s is EdgeState.LINE:
                adj[u].add(v)
                adj[v].add(u)
        return {v: frozenset(ws) for v, ws in adj.items()}

    @cached_property
    def _parent_adj(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self._vertices}
        for (u, v), s in self._state.items():
            if s is EdgeState.FORWARD:
                adj[v].add(u)
            elif s is EdgeState.BACKWARD:
                adj[u].add(v)
        return {v: frozenset(ws) for v, ws in adj.items()}

    @cached_property
    def _semi_succ(self) -> dict[str, tuple[str, ...]]:
        # v -> vertices reachable in one step via a line or a forward arrow
        adj: dict[str, set[str]] = {v: set() for v in self._vertices}
        for (u, v), s in self._state.items():
            if s is EdgeState.LINE:
                adj[u].add(v)
                adj[v].add(u)
            elif s is EdgeState.FORWARD:
                adj[u].add(v)
            else:
                adj[v].add(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def neighbors_of(self, v: str) -> frozenset[str]:
        """Vertices joined to v by a line."""
        self._require(v)
        return self._line_adj[v]

    def parents_of(self, v: str) -> frozenset[str]:
        """Vertices w with an arrow w -> v."""
        self._require(v)
        return self._parent_adj[v]

    # -- derived graphs -----------------------------------------------------

    def skeleton(self) -> MixedGraph:
        """The same adjacencies with every edge turned into a line."""
        return MixedGraph._make(
            self._vertices, {p: EdgeState.LINE for p in self._state}
        )

    def skeleton_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(self._state)

    def induced_subgraph(self, subset: Iterable[str]) -> MixedGraph:
        keep = self._subset(subset)
        vs = tuple(v for v in self._vertices if v in keep)
        state = {
            (u, v): s for (u, v), s in self._state.items() if u in keep and v in keep
        }
        return MixedGraph._make(vs, state)

    def with_edge(self, u: str, v: str, state: EdgeState) -> MixedGraph:
        """A copy with the (u, v) edge replaced; state is relative to (u, v)."""
        if u == v:
            raise GraphError(f"self-edge on {u!r}")
        self._require(u)
        self._require(v)
        pair = _pair(u, v)
        new = dict(self._state)
        if state is EdgeState.ABSENT:
            new.pop(pair, None)
        else:
            new[pair] = state if (u, v) == pair else state.flipped()
        return MixedGraph._make(self._vertices, new)

    def relabeled(self, mapping: Mapping[str, str]) -> MixedGraph:
        """A copy with vertices renamed through a one-to-one mapping."""
        missing = self.vertex_set - mapping.keys()
        if missing:
            raise GraphError(f"relabeling misses vertices {sorted(missing)}")
        if len(set(mapping[v] for v in self._vertices)) != len(self._vertices):
            raise GraphError("relabeling is not one-to-one")
        lines = [(mapping[u], mapping[v]) for u, v in self.lines()]
        arrows = [(mapping[t], mapping[h]) for t, h in self.arrows()]
        return MixedGraph((mapping[v] for v in self._vertices), lines, arrows)

    # -- chain-graph machinery ----------------------------------------------

    @cached_property
    def _chain_components(self) -> VertexPartition:
        seen: set[str] = set()
        blocks: list[frozenset[str]] = []
        for v in self._vertices:
            if v in seen:
                continue
            block = {v}
            queue = deque([v])
            while queue:
                w = queue.popleft()
                for x in self._line_adj[w]:
                    if x not in block:
                        block.add(x)
                        queue.append(x)
            seen |= block
            blocks.append(frozenset(block))
        return VertexPartition(tuple(blocks))

    def chain_components(self) -> VertexPartition:
        """Connected components after deleting all arrows."""
        return self._chain_components

    def is_chain_graph(self) -> bool:
        """True iff the graph has no semi-directed cycle."""
        parts = self._chain_components
        index = parts._index
        arcs: set[tuple[int, int]] = set()
        for tail, head in self.arrows():
            a, b = index[tail], index[head]
            if a == b:
                return False
            arcs.add((a, b))
        # Kahn's algorithm on the component quotient digraph.
        succ: dict[int, list[int]] = {}
        indeg: dict[int, int] = {}
        for a, b in arcs:
            succ.setdefault(a, []).append(b)
            indeg[b] = indeg.get(b, 0) + 1
            indeg.setdefault(a, 0)
        ready = deque(k for k, d in indeg.items() if d == 0)
        removed = 0
        while ready:
            a = ready.popleft()
            removed += 1
            for b in succ.get(a, ()):
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
        return removed == len(indeg)

    def semi_directed_reaches(self, src: str, dst: str) -> bool:
        """True iff dst is reachable from src via line or forward-arrow steps."""
        self._require(src)
        self._require(dst)
        if src == dst:
            return True
        seen = {src}
        queue = deque([src])
        succ = self._semi_succ
        while queue:
            v = queue.popleft()
            for w in succ[v]:
                if w == dst:
                    return True
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return False

    def arrow_on_semi_directed_cycle(self, tail: str, head: str) -> bool:
        """True iff the arrow tail -> head lies on some semi-directed cycle.

        Equivalent to: the head reaches the tail via line/forward-arrow steps.
        """
        if self.edge_state(tail, head) is not EdgeState.FORWARD:
            raise GraphError(f"no arrow {tail!r} -> {head!r}")
        return self.semi_directed_reaches(head, tail)

    def closure(self) -> MixedGraph:
        """The smallest chain graph containing this graph.

        Every arrow lying on a semi-directed cycle becomes a line; one pass
        suffices because such a conversion cannot put a previously cycle-free
        arrow onto a cycle.
        """
        new = dict(self._state)
        for (u, v), s in self._state.items():
            if s is EdgeState.FORWARD:
                tail, head = u, v
            elif s is EdgeState.BACKWARD:
                tail, head = v, u
            else:
                continue
            if self.semi_directed_reaches(head, tail):
                new[(u, v)] = EdgeState.LINE
        return MixedGraph._make(self._vertices, new)

    # -- boundary sets --------------------------------------------------------

    def _subset(self, subset: Iterable[str]) -> frozenset[str]:
        sub = frozenset(subset)
        stray = sub - self.vertex_set
        if stray:
            raise GraphError(f"not a vertex subset: {sorted(stray)}")
        return sub

    def parents(self, subset: Iterable[str]) -> frozenset[str]:
        """Vertices outside the set with an arrow into at least one member."""
        sub = self._subset(subset)
        out: set[str] = set()
        for a in sub:
            out |= self._parent_adj[a]
        return frozenset(out - sub)

    def neighbors(self, subset: Iterable[str]) -> frozenset[str]:
        """Vertices outside the set joined by a line to at least one member."""
        sub = self._subset(subset)
        out: set[str] = set()
        for a in sub:
            out |= self._line_adj[a]
        return frozenset(out - sub)

    def covering_neighbors(self, subset: Iterable[str]) -> frozenset[str]:
        """Vertices outside the set joined by a line to every member."""
        sub = self._require_nonempty(subset)
        common: frozenset[str] | None = None
        for a in sub:
            common = self._line_adj[a] if common is None else common & self._line_adj[a]
            if not common:
                break
        return frozenset(common or ()) - sub

    def covering_parents(self, subset: Iterable[str]) -> frozenset[str]:
        """Vertices outside the set with an arrow into every member."""
        sub = self._require_nonempty(subset)
        common: frozenset[str] | None = None
        for a in sub:
            common = (
                self._parent_adj[a] if common is None else common & self._parent_adj[a]
            )
            if not common:
                break
        return frozenset(common or ()) - sub

    def noncovering_neighbors(self, subset: Iterable[str]) -> frozenset[str]:
        """Neighbors of the set that miss at least one member."""
        return self.neighbors(subset) - self.covering_neighbors(subset)

    def closure_set(self, subset: Iterable[str]) -> frozenset[str]:
        """The set together with its parents."""
        sub = self._subset(subset)
        return sub | self.parents(sub)

    def _require_nonempty(self, subset: Iterable[str]) -> frozenset[str]:
        sub = self._subset(subset)
        if not sub:
            raise GraphError("covering boundary queries need a nonempty set")
        return sub

    def boundary_set(self, subset: Iterable[str], kind: str) -> frozenset[str]:
        """Dispatch to one of the boundary-set queries by name."""
        if kind not in _BOUNDARY_KINDS:
            raise GraphError(f"unknown boundary kind {kind!r}")
        return getattr(self, kind)(subset)

    def is_complete(self, subset: Iterable[str]) -> bool:
        """True iff every two distinct members of the set are adjacent."""
        sub = sorted(self._subset(subset))
        return all(self.adjacent(u, v) for u, v in combinations(sub, 2))
