import pytest
from hypothesis import given, settings

from cgk.core import GraphError
from cgk.equivalence import enumerate_class, essential_graph
from cgk.patterns import find_chordless_undirected_cycles, find_flags
from cgk.validate import (
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

from .conftest import g
from .strategies import chain_graphs

STRONG, WEAK, TRIVIAL = (
    ComponentClass.STRONG,
    ComponentClass.WEAK,
    ComponentClass.TRIVIAL,
)


class TestClassifyComponents:
    def test_flag_component_strong(self, flag):
        assert classify_chain_components(flag) == {
            frozenset("a"): TRIVIAL,
            frozenset("bc"): STRONG,
        }

    def test_line_path_weak(self, line_path):
        assert classify_chain_components(line_path) == {frozenset("abc"): WEAK}

    def test_immorality_all_trivial(self, immorality):
        assert set(classify_chain_components(immorality).values()) == {TRIVIAL}

    def test_four_cycle_strong(self, four_cycle):
        assert classify_chain_components(four_cycle) == {frozenset("abcd"): STRONG}

    def test_non_chain_rejected(self):
        with pytest.raises(GraphError, match="chain"):
            classify_chain_components(g("a -> b\nb -- c\nc -- a"))


@given(chain_graphs(max_vertices=5))
@settings(max_examples=100)
def test_strong_means_cycle_or_flag_in_closure(graph):
    # The chordality shortcut must agree with the literal reading: a
    # chordless undirected cycle or flag inside the component's closure.
    for block, cls in classify_chain_components(graph).items():
        if len(block) == 1:
            assert cls is TRIVIAL
            continue
        closure = graph.induced_subgraph(graph.closure_set(block))
        literal = bool(
            find_chordless_undirected_cycles(closure, limit=1) or find_flags(closure)
        )
        assert (cls is STRONG) == literal


class TestPropertyS:
    def test_four_cycle_holds(self, four_cycle):
        ok, witness = property_s(four_cycle, frozenset("abcd"))
        assert ok and witness is None

    def test_flag_fails_at_far_end(self, flag):
        ok, witness = property_s(flag, frozenset("bc"))
        assert not ok
        assert witness.alpha == ("c",)
        assert witness.kappa == ("b",)

    def test_two_biflag_holds(self, two_biflag):
        ok, _ = property_s(two_biflag, frozenset(("c1", "c2")))
        assert ok

    def test_bare_line_fails(self):
        ok, _ = property_s(g("a -- b"), frozenset("ab"))
        assert not ok

    def test_not_a_component(self, flag):
        with pytest.raises(GraphError, match="component"):
            property_s(flag, frozenset("ab"))

    def test_trivial_component_rejected(self, flag):
        with pytest.raises(GraphError, match="nontrivial"):
            property_s(flag, frozenset("a"))


class TestPropertySPrime:
    def test_same_verdicts_on_fixtures(self, four_cycle, flag, two_biflag):
        cases = [
            (four_cycle, frozenset("abcd")),
            (flag, frozenset("bc")),
            (two_biflag, frozenset(("c1", "c2"))),
        ]
        for graph, comp in cases:
            assert property_s(graph, comp)[0] == property_s_prime(graph, comp)[0]

    def test_bare_line_fails(self):
        ok, witness = property_s_prime(g("a -- b"), frozenset("ab"))
        assert not ok
        assert witness is not None

    def test_star_center_vacuous(self):
        # The center's covering-neighbor set {a, b} is not complete, so that
        # kappa imposes nothing; the component still fails through a leaf,
        # whose only neighbor is the center.
        star = g("a -- m\nb -- m")
        ok, witness = property_s_prime(star, frozenset("abm"))
        assert not ok
        assert witness.kappa == ("a",)
        assert witness.alpha == ("m",)
        assert property_s(star, frozenset("abm"))[0] == ok


@given(chain_graphs(max_vertices=5))
@settings(max_examples=150, deadline=None)
def test_s_equals_s_prime(graph):
    for block in graph.chain_components():
        if len(block) >= 2:
            assert property_s(graph, block)[0] == property_s_prime(graph, block)[0]


class TestIrreversible:
    def test_immorality_arrows(self, immorality):
        assert is_irreversible_arrow(immorality, "a", "b")

    def test_single_arrow_reversible(self):
        assert not is_irreversible_arrow(g("a -> b"), "a", "b")

    def test_reversal_would_create_immorality(self):
        graph = g("c -> a\na -> b")
        assert is_irreversible_arrow(graph, "a", "b")

    def test_requires_arrow(self, line_path):
        with pytest.raises(GraphError):
            is_irreversible_arrow(line_path, "a", "b")
        with pytest.raises(GraphError, match="no edge"):
            is_irreversible_arrow(line_path, "a", "c")


class TestProtected:
    def test_single_arrow_unprotected(self):
        assert not is_protected_arrow(g("a -> b"), "a", "b")

    def test_immorality_both_protected(self, immorality):
        assert is_protected_arrow(immorality, "a", "b")
        assert is_protected_arrow(immorality, "c", "b")

    def test_directed_triangle_protected(self):
        graph = g("a -> c\nc -> b\na -> b")
        assert is_protected_arrow(graph, "a", "b")


@given(chain_graphs(max_vertices=5))
@settings(max_examples=200, deadline=None)
def test_protected_equals_irreversible(graph):
    for t, h in graph.arrows():
        assert is_protected_arrow(graph, t, h) == is_irreversible_arrow(graph, t, h)


class TestWellProtected:
    def test_immorality(self, immorality):
        assert is_well_protected_arrow(immorality, "a", "b")

    def test_flag_arrow_via_strong_line(self, flag):
        # the line b -- c is strong (flag in the component's closure)
        assert is_well_protected_arrow(flag, "a", "b")

    def test_single_arrow(self):
        assert not is_well_protected_arrow(g("a -> b"), "a", "b")

    def test_weak_line_does_not_protect(self):
        # a -> b -- c with b -- c weak would need another configuration
        graph = g("t -> u\nu -- v")
        strong = frozenset()  # pretend no strong components
        assert not is_well_protected_arrow(graph, "t", "u", strong)

    def test_immorality_with_joined_tails(self):
        # c -> b <- d plus lines a -- c, a -- d protects a -> b
        graph = g("a -> b\nc -> b\nd -> b\na -- c\na -- d")
        strong = frozenset()
        assert is_well_protected_arrow(graph, "a", "b", strong)


class TestValidateEssential:
    def test_immorality_accepted(self, immorality):
        assert validate_essential(immorality).is_essential

    def test_flag_rejected_by_g2(self, flag):
        verdict = validate_essential(flag)
        assert not verdict.is_essential
        assert [f.condition for f in verdict.failures] == ["G2"]
        comp, alpha, kappa = verdict.failures[0].witness
        assert comp == ("b", "c")
        assert alpha == ("c",)
        assert kappa == ("b",)

    def test_non_chain_rejected_by_g1(self):
        verdict = validate_essential(g("a -> b\nb -- c\nc -- a"))
        assert [f.condition for f in verdict.failures] == ["G1"]
        assert verdict.failures[0].witness == ("a", "b")

    def test_single_arrow_rejected_by_g3(self):
        verdict = validate_essential(g("a -> b"))
        assert not verdict.is_essential
        assert [f.condition for f in verdict.failures] == ["G3"]

    def test_pendant_cycle_rejected(self, cycle_with_pendant):
        verdict = validate_essential(cycle_with_pendant)
        assert not verdict.is_essential
        assert any(f.condition == "G2" for f in verdict.failures)

    def test_describe_lines(self, flag):
        text = validate_essential(flag).failures[0].describe()
        assert text.startswith("G2:")
        assert "alpha" in text


class TestValidateDirected:
    def test_immorality(self, immorality):
        assert validate_directed_essential(immorality)

    def test_single_arrow(self):
        assert not validate_directed_essential(g("a -> b"))

    def test_dipath_not_essential(self):
        # its class also contains the all-lines path, so it is not the
        # class representative
        dipath = g("a -> b\nb -> c")
        assert g("a -- b\nb -- c") in enumerate_class(dipath)
        assert not validate_directed_essential(dipath)

    def test_rejects_lines(self, flag):
        with pytest.raises(GraphError, match="directed"):
            validate_directed_essential(flag)

    def test_cyclic_is_false(self):
        assert not validate_directed_essential(g("a -> b\nb -> c\nc -> a"))


@given(chain_graphs(max_vertices=4))
@settings(max_examples=60, deadline=None)
def test_validator_agrees_with_brute_force(graph):
    ess = essential_graph(enumerate_class(graph)).graph
    assert validate_essential(ess).is_essential
    if graph != ess:
        assert not validate_essential(graph).is_essential


def test_validator_agrees_with_brute_force_sampled_at_five():
    import random

    from cgk.core import EdgeState, MixedGraph
    from itertools import combinations

    rng = random.Random(11)
    names = tuple(f"v{i}" for i in range(1, 6))
    pairs = list(combinations(names, 2))
    states = (EdgeState.ABSENT, EdgeState.LINE, EdgeState.FORWARD, EdgeState.BACKWARD)
    seen = 0
    while seen < 15:
        state = {}
        for pair in pairs:
            s = rng.choice(states)
            if s is not EdgeState.ABSENT:
                state[pair] = s
        graph = MixedGraph._make(names, state)
        if not graph.is_chain_graph() or graph.edge_count > 7:
            continue
        seen += 1
        ess = essential_graph(enumerate_class(graph)).graph
        assert validate_essential(ess).is_essential
        assert validate_essential(graph).is_essential == (graph == ess)
