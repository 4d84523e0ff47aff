import json
import random
from itertools import combinations

import pytest

from cgk.core import EdgeState, GraphError, MixedGraph
from cgk.equivalence import essential_graph_of
from cgk.graphio import (
    ParseError,
    parse_graph,
    render_compact,
    render_dot,
    render_graph,
    render_json,
    render_text,
)

from .conftest import g


class TestParse:
    def test_basic(self):
        graph = g("a -> b\nb -- c")
        assert graph.edge_state("a", "b") is EdgeState.FORWARD
        assert graph.edge_state("b", "c") is EdgeState.LINE

    def test_isolated_vertex(self):
        assert g("node a").vertices == ("a",)

    def test_comments_and_blanks(self):
        graph = g("# header\n\na -> b  # trailing\n")
        assert graph == g("a -> b")

    def test_duplicate_pair(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_graph("a -> b\nb -> a")

    def test_self_edge(self):
        with pytest.raises(ParseError, match="self-edge"):
            parse_graph("a -- a")

    def test_bad_operator_position(self):
        with pytest.raises(ParseError) as info:
            parse_graph("a -> b\na <- c")
        assert info.value.line == 2
        assert info.value.column == 3

    def test_unknown_annotation(self):
        with pytest.raises(ParseError, match="unknown annotation"):
            parse_graph("a -> b [x]")

    def test_arity_error(self):
        with pytest.raises(ParseError, match="expected"):
            parse_graph("a -> b [w] extra")
        with pytest.raises(ParseError, match="unknown annotation"):
            parse_graph("a -> b c")

    def test_reserved_name(self):
        with pytest.raises(ParseError, match="reserved"):
            parse_graph("node node")

    def test_strengths_all_annotated(self):
        parsed = parse_graph("a -> b [w]\nb -- c [s]")
        assert parsed.labeled is not None
        assert parsed.labeled.strength_of("a", "b").marker == "w"
        assert parsed.labeled.strength_of("b", "c").marker == "s"

    def test_strengths_partial_rejected(self):
        with pytest.raises(GraphError, match="every edge or none"):
            parse_graph("a -> b [w]\nb -- c")

    def test_no_strengths(self):
        assert parse_graph("a -> b").labeled is None


class TestRenderText:
    def test_essential_flag_exact(self, flag):
        assert render_text(essential_graph_of(flag)) == "a -> b [w]\nc -> b [w]"

    def test_four_cycle_strong(self, four_cycle):
        rendered = render_text(essential_graph_of(four_cycle))
        assert rendered.splitlines() == [
            "a -- b [s]",
            "a -- d [s]",
            "b -- c [s]",
            "c -- d [s]",
        ]

    def test_edgeless(self):
        assert render_text(g("node a\nnode b")) == "node a\nnode b"

    def test_backward_arrow_rendered_tail_first(self):
        graph = MixedGraph("ab", arrows=[("b", "a")])
        assert render_text(graph) == "b -> a"

    def test_compact(self, flag):
        assert render_compact(flag) == "a -> b; b -- c"


def _random_graph(rng, max_vertices=8):
    n = rng.randint(1, max_vertices)
    names = [f"x{i}" for i in range(n)]
    states = (
        EdgeState.ABSENT,
        EdgeState.LINE,
        EdgeState.FORWARD,
        EdgeState.BACKWARD,
    )
    state = {}
    for pair in combinations(names, 2):
        s = rng.choice(states)
        if s is not EdgeState.ABSENT:
            state[pair] = s
    return MixedGraph._make(tuple(names), state)


def test_round_trip_on_1000_random_graphs():
    rng = random.Random(20240811)
    for _ in range(1000):
        graph = _random_graph(rng)
        assert parse_graph(render_text(graph)).graph == graph


def test_round_trip_keeps_strengths():
    labeled = essential_graph_of(g("a -> b\nb -- c"))
    parsed = parse_graph(render_text(labeled))
    assert parsed.labeled == labeled


def test_rendering_injective_on_fixed_vertex_set():
    rng = random.Random(7)
    seen = {}
    for _ in range(300):
        graph = _random_graph(rng, max_vertices=4)
        text = render_text(graph)
        key = (graph.vertices, text)
        if key in seen:
            assert seen[key] == graph
        seen[key] = graph
    texts = {}
    for (_, text), graph in seen.items():
        assert texts.setdefault(text, graph) == graph


class TestRenderDot:
    def test_shapes(self, flag):
        dot = render_dot(flag)
        assert dot.startswith("digraph")
        assert '"a" -> "b";' in dot
        assert '"b" -> "c" [dir=none];' in dot

    def test_strong_bold(self, four_cycle):
        dot = render_dot(essential_graph_of(four_cycle))
        assert "[dir=none, style=bold]" in dot

    def test_isolated_declared(self):
        assert '"a";' in render_dot(g("node a"))


class TestRenderJson:
    def test_schema(self, flag):
        payload = json.loads(render_json(essential_graph_of(flag)))
        assert payload["vertices"] == ["a", "b", "c"]
        assert payload["edges"] == [
            {"kind": "arrow", "tail": "a", "head": "b", "strength": "w"},
            {"kind": "arrow", "tail": "c", "head": "b", "strength": "w"},
        ]

    def test_line_record(self):
        payload = json.loads(render_json(g("a -- b")))
        assert payload["edges"] == [
            {"kind": "line", "u": "a", "v": "b", "strength": None}
        ]


def test_render_graph_dispatcher(flag):
    assert render_graph(flag, "text") == render_text(flag)
    assert render_graph(flag, "dot") == render_dot(flag)
    assert render_graph(flag, "json") == render_json(flag)
    with pytest.raises(GraphError, match="unknown format"):
        render_graph(flag, "yaml")
