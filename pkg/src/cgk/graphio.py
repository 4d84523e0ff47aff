"""Text, DOT, and JSON serialization for mixed graphs.

The text grammar is line based and diff friendly::

    # comment
    node a            declares an isolated vertex
    a -- b            line
    a -> b [w]        arrow, optional strength suffix [s] or [w]

Vertex names appearing in edges are declared implicitly.  Strength suffixes
must cover either every edge or none; a fully annotated document parses to a
strength-labeled graph.  ``parse_graph(render_text(g)) == g`` for every valid
graph.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core import EdgeState, GraphError, MixedGraph, check_label
from .equivalence import EdgeStrength, StrengthLabeledGraph


class ParseError(GraphError):
    """A syntax or structure error in graph text, with its location."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ParsedGraph:
    graph: MixedGraph
    labeled: StrengthLabeledGraph | None  # present iff every edge is annotated


_TOKEN = re.compile(r"\S+")

_STRENGTH_BY_MARKER = {
    ("s", True): EdgeStrength.STRONG_LINE,
    ("w", True): EdgeStrength.WEAK_LINE,
    ("s", False): EdgeStrength.STRONG_ARROW,
    ("w", False): EdgeStrength.WEAK_ARROW,
}


def parse_graph(text: str) -> ParsedGraph:
    """Parse graph text, returning the graph and optional strength labels."""
    vertices: set[str] = set()
    lines: list[tuple[str, str]] = []
    arrows: list[tuple[str, str]] = []
    markers: dict[tuple[str, str], str] = {}
    seen_pairs: set[tuple[str, str]] = set()

    def name(token: str, lineno: int, col: int) -> str:
        try:
            return check_label(token)
        except GraphError as exc:
            raise ParseError(str(exc), lineno, col) from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if not tokens:
            continue
        if tokens[0][0] == "node":
            if len(tokens) != 2:
                raise ParseError("expected: node NAME", lineno, tokens[0][1])
            vertices.add(name(tokens[1][0], lineno, tokens[1][1]))
            continue
        if len(tokens) not in (3, 4):
            raise ParseError(
                "expected: NAME -- NAME or NAME -> NAME, optionally with [s] or [w]",
                lineno,
                tokens[0][1],
            )
        u = name(tokens[0][0], lineno, tokens[0][1])
        op, op_col = tokens[1]
        v = name(tokens[2][0], lineno, tokens[2][1])
        if op not in ("--", "->"):
            raise ParseError(f"unknown edge operator {op!r}", lineno, op_col)
        if u == v:
            raise ParseError(f"self-edge on {u!r}", lineno, tokens[0][1])
        pair = (u, v) if u < v else (v, u)
        if pair in seen_pairs:
            raise ParseError(f"duplicate edge for pair {pair}", lineno, tokens[0][1])
        seen_pairs.add(pair)
        if len(tokens) == 4:
            ann, ann_col = tokens[3]
            if ann not in ("[s]", "[w]"):
                raise ParseError(f"unknown annotation {ann!r}", lineno, ann_col)
            markers[pair] = ann[1]
        vertices.update((u, v))
        if op == "--":
            lines.append((u, v))
        else:
            arrows.append((u, v))

    graph = MixedGraph(vertices, lines=lines, arrows=arrows)
    if not markers:
        return ParsedGraph(graph, None)
    if len(markers) != graph.edge_count:
        raise GraphError("strength annotations must cover every edge or none")
    strengths = {
        pair: _STRENGTH_BY_MARKER[(marker, graph.edge_state(*pair) is EdgeState.LINE)]
        for pair, marker in markers.items()
    }
    return ParsedGraph(graph, StrengthLabeledGraph(graph, strengths))


def _unpack(
    obj: MixedGraph | StrengthLabeledGraph,
) -> tuple[MixedGraph, StrengthLabeledGraph | None]:
    if isinstance(obj, StrengthLabeledGraph):
        return obj.graph, obj
    return obj, None


def _edge_atoms(g: MixedGraph) -> list[tuple[tuple[str, str], str]]:
    atoms = []
    for u, v, s in g.edges():
        if s is EdgeState.LINE:
            atoms.append(((u, v), f"{u} -- {v}"))
        elif s is EdgeState.FORWARD:
            atoms.append(((u, v), f"{u} -> {v}"))
        else:
            atoms.append(((u, v), f"{v} -> {u}"))
    return atoms


def _isolated(g: MixedGraph) -> list[str]:
    incident: set[str] = set()
    for u, v, _ in g.edges():
        incident.update((u, v))
    return [v for v in g.vertices if v not in incident]


def render_text(obj: MixedGraph | StrengthLabeledGraph) -> str:
    """One declaration per row: isolated vertices first, then edges."""
    g, labeled = _unpack(obj)
    rows = [f"node {v}" for v in _isolated(g)]
    for pair, atom in _edge_atoms(g):
        if labeled is not None:
            atom += f" [{labeled.strengths[pair].marker}]"
        rows.append(atom)
    return "\n".join(rows)


def render_compact(obj: MixedGraph | StrengthLabeledGraph) -> str:
    """The text rendering on a single line, declarations joined by '; '."""
    return "; ".join(render_text(obj).splitlines())


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(obj: MixedGraph | StrengthLabeledGraph) -> str:
    """DOT digraph; lines use dir=none, strong edges are bold."""
    g, labeled = _unpack(obj)
    rows = ["digraph cg {"]
    for v in _isolated(g):
        rows.append(f"  {_dot_quote(v)};")
    for u, v, s in g.edges():
        tail, head = (v, u) if s is EdgeState.BACKWARD else (u, v)
        attrs = []
        if s is EdgeState.LINE:
            attrs.append("dir=none")
        if labeled is not None and labeled.strengths[(u, v)].is_strong:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        rows.append(f"  {_dot_quote(tail)} -> {_dot_quote(head)}{suffix};")
    rows.append("}")
    return "\n".join(rows)


def render_json(obj: MixedGraph | StrengthLabeledGraph) -> str:
    """JSON object with vertex list and typed edge records."""
    g, labeled = _unpack(obj)
    edges = []
    for u, v, s in g.edges():
        strength = labeled.strengths[(u, v)].marker if labeled is not None else None
        if s is EdgeState.LINE:
            edges.append({"kind": "line", "u": u, "v": v, "strength": strength})
        else:
            tail, head = (v, u) if s is EdgeState.BACKWARD else (u, v)
            edges.append(
                {"kind": "arrow", "tail": tail, "head": head, "strength": strength}
            )
    return json.dumps({"vertices": list(g.vertices), "edges": edges}, indent=2)


_RENDERERS = {"text": render_text, "dot": render_dot, "json": render_json}


def render_graph(obj: MixedGraph | StrengthLabeledGraph, fmt: str = "text") -> str:
    """Render in one of the formats: text, dot, json."""
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise GraphError(f"unknown format {fmt!r}") from None
    return renderer(obj)
