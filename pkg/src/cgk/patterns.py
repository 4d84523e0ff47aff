"""Induced-subgraph motifs, chordality, and maximum cardinality search.

Triplexes are the three-vertex motifs that, together with the skeleton,
determine AMP Markov equivalence of chain graphs.  Biflags are the larger
arrow-flanked line-path motifs whose presence obstructs equivalence to a
fully directed graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Sequence

from .core import EdgeState, GraphError, MixedGraph


class TripleShape(Enum):
    IMMORALITY = "immorality"            # a -> b <- c
    FLAG = "flag"                        # a -> b -- c
    ANTIFLAG = "antiflag"                # a -- b -> c
    CHORDLESS_2_DIPATH = "2-dipath"      # a -> b -> c
    OTHER = "other"


@dataclass(frozen=True)
class ClassifiedTriple:
    """An ordered triple (a, b, c) realizing one of the named shapes."""

    vertices: tuple[str, str, str]
    shape: TripleShape


@dataclass(frozen=True, order=True)
class Triplex:
    """An unordered nonadjacent pair of ends with a shared adjacent center.

    Present when the induced subgraph on {a, b, c} is a -> b <- c,
    a -> b -- c, or a -- b <- c with a and c nonadjacent.
    """

    ends: tuple[str, str]
    center: str

    @classmethod
    def make(cls, a: str, c: str, center: str) -> Triplex:
        if len({a, c, center}) != 3:
            raise GraphError("triplex vertices must be distinct")
        return cls(ends=(a, c) if a < c else (c, a), center=center)

    def __repr__(self) -> str:
        return f"({{{self.ends[0]},{self.ends[1]}}}, {self.center})"


def _into_center(g: MixedGraph) -> dict[str, list[tuple[str, bool]]]:
    # center -> [(x, via_strict_arrow)] for every x with x -> center or x -- center
    into: dict[str, list[tuple[str, bool]]] = {v: [] for v in g.vertices}
    for u, v, s in g.edges():
        if s is EdgeState.LINE:
            into[v].append((u, False))
            into[u].append((v, False))
        elif s is EdgeState.FORWARD:
            into[v].append((u, True))
        else:
            into[u].append((v, True))
    return into


def find_triplexes(g: MixedGraph) -> frozenset[Triplex]:
    """All triplexes of the graph."""
    out: set[Triplex] = set()
    into = _into_center(g)
    for b in g.vertices:
        entries = into[b]
        for (x, sx), (y, sy) in combinations(entries, 2):
            if (sx or sy) and not g.adjacent(x, y):
                out.add(Triplex.make(x, y, b))
    return frozenset(out)


def classify_triples(g: MixedGraph) -> list[ClassifiedTriple]:
    """Every realization of the four named shapes, in canonical order.

    An immorality is symmetric in its outer vertices and is reported once,
    with the outer pair in ascending order.
    """
    out: list[ClassifiedTriple] = []
    for b in g.vertices:
        others = [v for v in g.vertices if v != b and g.adjacent(v, b)]
        for a in others:
            ab = g.edge_state(a, b)
            for c in others:
                if c == a or g.adjacent(a, c):
                    continue
                bc = g.edge_state(b, c)
                shape = _shape_of(ab, bc)
                if shape is TripleShape.OTHER:
                    continue
                if shape is TripleShape.IMMORALITY and a > c:
                    continue
                out.append(ClassifiedTriple((a, b, c), shape))
    out.sort(key=lambda t: (t.vertices[1], t.vertices))
    return out


def _shape_of(ab: EdgeState, bc: EdgeState) -> TripleShape:
    if ab is EdgeState.FORWARD and bc is EdgeState.BACKWARD:
        return TripleShape.IMMORALITY
    if ab is EdgeState.FORWARD and bc is EdgeState.LINE:
        return TripleShape.FLAG
    if ab is EdgeState.LINE and bc is EdgeState.FORWARD:
        return TripleShape.ANTIFLAG
    if ab is EdgeState.FORWARD and bc is EdgeState.FORWARD:
        return TripleShape.CHORDLESS_2_DIPATH
    return TripleShape.OTHER


def classify_triple(g: MixedGraph, a: str, b: str, c: str) -> TripleShape:
    """Shape of the ordered triple (a, b, c), or OTHER."""
    if len({a, b, c}) != 3:
        raise GraphError("triple vertices must be distinct")
    if not (g.adjacent(a, b) and g.adjacent(b, c)) or g.adjacent(a, c):
        return TripleShape.OTHER
    return _shape_of(g.edge_state(a, b), g.edge_state(b, c))


def _filtered(g: MixedGraph, shape: TripleShape) -> list[ClassifiedTriple]:
    return [t for t in classify_triples(g) if t.shape is shape]


def find_immoralities(g: MixedGraph) -> list[ClassifiedTriple]:
    return _filtered(g, TripleShape.IMMORALITY)


def find_flags(g: MixedGraph) -> list[ClassifiedTriple]:
    return _filtered(g, TripleShape.FLAG)


def find_antiflags(g: MixedGraph) -> list[ClassifiedTriple]:
    return _filtered(g, TripleShape.ANTIFLAG)


def find_chordless_2_dipaths(g: MixedGraph) -> list[ClassifiedTriple]:
    return _filtered(g, TripleShape.CHORDLESS_2_DIPATH)


# -- chordality and chordless cycles ---------------------------------------


def _require_undirected(g: MixedGraph) -> None:
    if not g.is_undirected():
        raise GraphError("operation requires a fully undirected graph")


def is_chordal(g: MixedGraph) -> bool:
    """True iff the undirected graph has no chordless cycle of length >= 4.

    Runs maximum cardinality search and checks that the reverse visit order
    is a perfect elimination ordering.
    """
    _require_undirected(g)
    order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.neighbors_of(v) if pos[w] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=pos.__getitem__)
        rest = set(earlier) - {u}
        if not rest <= g.neighbors_of(u):
            return False
    return True


def find_chordless_undirected_cycles(
    g: MixedGraph, limit: int | None = None
) -> list[tuple[str, ...]]:
    """Chordless cycles of length >= 4 whose edges are all lines.

    Nonconsecutive cycle vertices must be nonadjacent by ANY edge type.  Each
    cycle is reported once, rotated to start at its least vertex and oriented
    toward its smaller second vertex; enumeration stops after ``limit``.
    """
    out: list[tuple[str, ...]] = []

    def grow(path: list[str]) -> bool:
        s = path[0]
        for w in sorted(g.neighbors_of(path[-1])):
            if limit is not None and len(out) >= limit:
                return False
            if w <= s or w in path:
                continue
            # Close the cycle: needs length >= 4, a closing line, no chords
            # to interior vertices, and the canonical direction.
            if (
                len(path) >= 3
                and g.edge_state(w, s) is EdgeState.LINE
                and w > path[1]
                and not any(g.adjacent(w, x) for x in path[1:-1])
            ):
                out.append(tuple(path) + (w,))
                if limit is not None and len(out) >= limit:
                    return False
            # Extend the path: w may touch nothing before its predecessor.
            if not any(g.adjacent(w, x) for x in path[:-1]):
                path.append(w)
                if not grow(path):
                    return False
                path.pop()
        return True

    for s in g.vertices:
        if not grow([s]):
            break
    return out


# -- maximum cardinality search ---------------------------------------------


def mcs_order(g: MixedGraph, priority_prefix: Sequence[str] = ()) -> list[str]:
    """Maximum-cardinality-search visit order over an undirected graph.

    Visits the prefix first, in the given order (valid exactly when the
    prefix is a complete set); afterwards repeatedly picks a vertex with the
    most already-visited neighbors, breaking ties by label order.
    """
    _require_undirected(g)
    prefix = list(priority_prefix)
    if len(set(prefix)) != len(prefix):
        raise GraphError("priority prefix has repeated vertices")
    for v in prefix:
        g._require(v)
    for u, v in combinations(prefix, 2):
        if not g.adjacent(u, v):
            raise GraphError(f"priority prefix is not complete: {u!r} and {v!r}")

    order: list[str] = []
    visited: set[str] = set()
    weight = {v: 0 for v in g.vertices}

    def visit(v: str) -> None:
        order.append(v)
        visited.add(v)
        for w in g.neighbors_of(v):
            weight[w] += 1

    for v in prefix:
        visit(v)
    remaining = [v for v in g.vertices if v not in visited]
    while remaining:
        best = min(remaining, key=lambda v: (-weight[v], v))
        visit(best)
        remaining.remove(best)
    return order


def mcs_perfect_orientation(
    g: MixedGraph, priority_prefix: Sequence[str] = ()
) -> MixedGraph:
    """Orient a chordal undirected graph acyclically without immoralities.

    Lines point from the earlier-visited endpoint to the later one under the
    MCS order; the prefix (a complete set) is visited first.
    """
    _require_undirected(g)
    if not is_chordal(g):
        raise GraphError("perfect orientation requires a chordal graph")
    order = mcs_order(g, priority_prefix)
    pos = {v: i for i, v in enumerate(order)}
    arrows = []
    for u, v in g.lines():
        arrows.append((u, v) if pos[u] < pos[v] else (v, u))
    return MixedGraph(g.vertices, arrows=arrows)


def is_perfect_orientation(g: MixedGraph) -> bool:
    """True iff the fully directed graph is acyclic with no immoralities."""
    if not g.is_directed():
        raise GraphError("perfect-orientation check requires a directed graph")
    return g.is_chain_graph() and not find_immoralities(g)


# -- biflags -----------------------------------------------------------------


@dataclass(frozen=True)
class Biflag:
    """One or two arrow-parents flanking a chordless undirected spine.

    Single-parent form (spine c1..ck, k >= 3): the parent points at every
    interior spine vertex and is nonadjacent to both spine ends.  Two-parent
    form (k >= 2): the first parent points at c1..c(k-1) and misses ck, the
    second points at c2..ck and misses c1.  The edge between the two parents
    is not part of the motif and may be anything, including absent.  The
    smallest instance is a -> c1 -- c2 <- b.
    """

    parents: tuple[str, ...]
    spine: tuple[str, ...]

    def __repr__(self) -> str:
        return f"[{', '.join(self.parents)}; {', '.join(self.spine)}]"


def _chordless_line_paths(g: MixedGraph, min_len: int) -> Iterator[tuple[str, ...]]:
    # Yields each chordless undirected path with at least min_len vertices,
    # in both directions.
    def grow(path: list[str], members: set[str]) -> Iterator[tuple[str, ...]]:
        if len(path) >= min_len:
            yield tuple(path)
        for w in sorted(g.neighbors_of(path[-1])):
            if w in members or any(g.adjacent(w, x) for x in path[:-1]):
                continue
            path.append(w)
            members.add(w)
            yield from grow(path, members)
            path.pop()
            members.remove(w)

    for s in g.vertices:
        yield from grow([s], {s})


def find_biflags(g: MixedGraph) -> list[Biflag]:
    """All biflags occurring as induced subgraphs, in canonical order."""
    out: list[Biflag] = []
    for spine in _chordless_line_paths(g, 2):
        if spine[0] > spine[-1]:
            continue  # each spine handled once, in its canonical direction
        k = len(spine)
        spine_set = set(spine)
        candidates = [v for v in g.vertices if v not in spine_set]
        if k >= 3:
            for a in candidates:
                if (
                    all(
                        g.edge_state(a, c) is EdgeState.FORWARD for c in spine[1:-1]
                    )
                    and not g.adjacent(a, spine[0])
                    and not g.adjacent(a, spine[-1])
                ):
                    out.append(Biflag((a,), spine))
        for a in candidates:
            if g.adjacent(a, spine[-1]) or not all(
                g.edge_state(a, c) is EdgeState.FORWARD for c in spine[:-1]
            ):
                continue
            for b in candidates:
                if b == a or g.adjacent(b, spine[0]):
                    continue
                if all(g.edge_state(b, c) is EdgeState.FORWARD for c in spine[1:]):
                    out.append(Biflag((a, b), spine))
    out.sort(key=lambda f: (len(f.spine), f.spine, f.parents))
    return out
