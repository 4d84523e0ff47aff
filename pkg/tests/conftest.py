import pytest

from cgk.graphio import parse_graph


def g(text: str):
    """Build a graph from the line-based text format."""
    return parse_graph(text).graph


@pytest.fixture
def flag():
    return g("a -> b\nb -- c")


@pytest.fixture
def immorality():
    return g("a -> b\nc -> b")


@pytest.fixture
def line_path():
    return g("a -- b\nb -- c")


@pytest.fixture
def four_cycle():
    return g("a -- b\nb -- c\nc -- d\nd -- a")


@pytest.fixture
def two_biflag():
    return g("a -> c1\nb -> c2\nc1 -- c2")


@pytest.fixture
def cycle_with_pendant():
    return g("b -- c\nc -- d\nd -- e\nb -- e\nb -- f")
