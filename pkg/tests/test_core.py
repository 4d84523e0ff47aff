from itertools import permutations

import pytest
from hypothesis import given, settings

from cgk.core import EdgeState, GraphError, MixedGraph

from .conftest import g
from .strategies import chain_graphs, mixed_graphs

A, L, F, B = EdgeState.ABSENT, EdgeState.LINE, EdgeState.FORWARD, EdgeState.BACKWARD


class TestEdgeState:
    def test_readback(self):
        graph = g("a -> b")
        assert graph.edge_state("a", "b") is F

    def test_orientation_flip(self):
        graph = g("a -> b")
        assert graph.edge_state("b", "a") is B

    def test_unknown_vertex(self):
        graph = g("a -> b")
        with pytest.raises(GraphError, match="unknown vertex"):
            graph.edge_state("a", "c")

    def test_self_query(self):
        with pytest.raises(GraphError):
            g("a -> b").edge_state("a", "a")

    def test_absent(self):
        assert g("a -> b\nnode c").edge_state("a", "c") is A


class TestConstruction:
    def test_duplicate_pair_rejected(self):
        with pytest.raises(GraphError, match="duplicate"):
            MixedGraph("ab", lines=[("a", "b")], arrows=[("b", "a")])

    def test_self_edge_rejected(self):
        with pytest.raises(GraphError, match="self-edge"):
            MixedGraph("ab", lines=[("a", "a")])

    def test_bad_labels_rejected(self):
        for label in ("", "a b", "a->b", "x--y", "no#de", "[s]", "node"):
            with pytest.raises(GraphError):
                MixedGraph([label])

    def test_isolated_vertices_representable(self):
        graph = MixedGraph("abc", arrows=[("a", "b")])
        assert graph.vertices == ("a", "b", "c")

    def test_equality_and_hash(self):
        g1 = g("a -> b\nb -- c")
        g2 = MixedGraph("abc", lines=[("c", "b")], arrows=[("a", "b")])
        assert g1 == g2
        assert hash(g1) == hash(g2)
        assert g1 != g("a -> b\nb -> c")


class TestSkeleton:
    def test_arrow_erasure(self):
        assert g("a -> b\nb -- c").skeleton() == g("a -- b\nb -- c")

    def test_immorality(self):
        assert g("a -> b\nc -> b").skeleton() == g("a -- b\nb -- c")

    def test_edgeless_identity(self):
        graph = g("node a\nnode b")
        assert graph.skeleton() == graph


class TestInducedSubgraph:
    def test_basic(self):
        graph = g("a -> b\nb -- c\na -> c")
        assert graph.induced_subgraph({"a", "b"}) == g("a -> b")

    def test_full_set_identity(self):
        graph = g("a -> b\nb -- c")
        assert graph.induced_subgraph(graph.vertices) == graph

    def test_empty(self):
        assert g("a -> b").induced_subgraph(()) == MixedGraph(())

    def test_not_a_subset(self):
        with pytest.raises(GraphError, match="subset"):
            g("a -> b").induced_subgraph({"z"})


class TestIsChainGraph:
    def test_semi_directed_triangle(self):
        assert not g("a -> b\nb -- c\nc -- a").is_chain_graph()

    def test_immorality_is_chain(self):
        assert g("a -> b\nc -> b").is_chain_graph()

    def test_directed_3_cycle(self):
        assert not g("a -> b\nb -> c\nc -> a").is_chain_graph()

    def test_line_cycle_is_chain(self):
        assert g("a -- b\nb -- c\nc -- a").is_chain_graph()


class TestChainComponents:
    def test_flag(self):
        blocks = g("a -> b\nb -- c").chain_components().blocks
        assert blocks == (frozenset("a"), frozenset(("b", "c")))

    def test_line_cycle(self):
        blocks = g("a -- b\nb -- c\nc -- d\nd -- a").chain_components().blocks
        assert blocks == (frozenset("abcd"),)

    def test_immorality(self):
        blocks = g("a -> b\nc -> b").chain_components().blocks
        assert blocks == (frozenset("a"), frozenset("b"), frozenset("c"))


class TestClosure:
    def test_directed_3_cycle_all_lines(self):
        assert g("a -> b\nb -> c\nc -> a").closure() == g("a -- b\nb -- c\nc -- a")

    def test_immorality_unchanged(self):
        graph = g("a -> b\nc -> b")
        assert graph.closure() == graph

    def test_mixed_triangle(self):
        # Oracle: enumerate every cycle of the 3-vertex graph by brute force;
        # only the a -> b arrow lies on the unique semi-directed cycle.
        graph = g("a -> b\nb -- c\nc -- a")
        on_cycle = _arrows_on_cycles_by_enumeration(graph)
        assert on_cycle == {("a", "b")}
        assert graph.closure() == g("a -- b\nb -- c\nc -- a")


def _steps_forward(graph, u, v):
    return graph.edge_state(u, v) in (L, F)


def _arrows_on_cycles_by_enumeration(graph):
    """Brute-force oracle: arrows contained in some semi-directed cycle,
    found by enumerating every vertex sequence."""
    found = set()
    vs = graph.vertices
    for k in range(3, len(vs) + 1):
        for cycle in permutations(vs, k):
            walk = cycle + (cycle[0],)
            pairs = list(zip(walk, walk[1:]))
            if not all(_steps_forward(graph, u, v) for u, v in pairs):
                continue
            arrows = [(u, v) for u, v in pairs if graph.edge_state(u, v) is F]
            found.update(arrows)
    return found


@given(mixed_graphs(max_vertices=5))
@settings(max_examples=150)
def test_cycle_membership_matches_path_enumeration(graph):
    oracle = _arrows_on_cycles_by_enumeration(graph)
    for t, h in graph.arrows():
        assert graph.arrow_on_semi_directed_cycle(t, h) == ((t, h) in oracle)


@given(mixed_graphs())
def test_closure_properties(graph):
    closed = graph.closure()
    assert closed.is_chain_graph()
    assert closed.closure() == closed
    assert closed.skeleton() == graph.skeleton()
    # arrows may weaken to lines, never vanish
    for u, v, s in graph.edges():
        assert closed.edge_state(u, v) in (s, L)


@given(mixed_graphs())
def test_chain_iff_closure_fixpoint(graph):
    assert graph.is_chain_graph() == (graph.closure() == graph)


@given(chain_graphs(), mixed_graphs())
def test_induced_subgraph_of_chain_graph_is_chain(graph, donor):
    subset = [v for v in graph.vertices if v in donor.vertex_set]
    assert graph.induced_subgraph(subset).is_chain_graph()


class TestBoundarySets:
    def test_two_biflag_center(self, two_biflag):
        assert two_biflag.covering_neighbors({"c1"}) == {"c2"}
        assert two_biflag.parents({"c1"}) == {"a"}

    def test_singleton_noncovering_empty(self):
        graph = g("a -- b\na -- c\nb -- c")
        for v in graph.vertices:
            assert graph.noncovering_neighbors({v}) == frozenset()

    def test_flag_component(self, flag):
        assert flag.parents({"b", "c"}) == {"a"}
        assert flag.covering_parents({"b", "c"}) == frozenset()

    def test_closure_set(self, flag):
        assert flag.closure_set({"b", "c"}) == {"a", "b", "c"}

    def test_empty_covering_rejected(self, flag):
        with pytest.raises(GraphError, match="nonempty"):
            flag.covering_neighbors(())

    def test_dispatcher(self, two_biflag):
        assert two_biflag.boundary_set({"c1"}, "covering_neighbors") == {"c2"}
        with pytest.raises(GraphError, match="unknown boundary kind"):
            two_biflag.boundary_set({"c1"}, "cousins")


@given(mixed_graphs())
def test_neighbor_partition(graph):
    vs = graph.vertices
    for v in vs:
        a = {v}
        cnb = graph.covering_neighbors(a)
        ncnb = graph.noncovering_neighbors(a)
        assert cnb | ncnb == graph.neighbors(a)
        assert not cnb & ncnb
    if len(vs) >= 2:
        a = set(vs[:2])
        assert graph.covering_neighbors(a) | graph.noncovering_neighbors(
            a
        ) == graph.neighbors(a)


@given(mixed_graphs(min_vertices=2))
def test_covering_neighbors_galois(graph):
    for v in graph.vertices:
        inner = graph.covering_neighbors({v})
        if inner:
            assert {v} <= graph.covering_neighbors(inner)


class TestRelabel:
    def test_roundtrip(self, flag):
        mapping = {"a": "x", "b": "y", "c": "z"}
        back = {v: k for k, v in mapping.items()}
        assert flag.relabeled(mapping).relabeled(back) == flag

    def test_must_cover(self, flag):
        with pytest.raises(GraphError):
            flag.relabeled({"a": "x"})
