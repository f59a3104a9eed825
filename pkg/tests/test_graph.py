import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monopath.graph import (Color, ColoredGraph, GraphFormatError, InvalidPath, MonoPath,
                            UNCOLORED, color_extremal_style, color_greedy, color_uniform,
                            complete_graph, extremal_coloring, from_edge_list, gnm, gnp,
                            min_degree, write_edge_list)


def test_smallest_colored_graph():
    g = from_edge_list("2 1\n0 1 r\n")
    assert g.n == 2 and g.m == 1
    assert g.color(0, 1) == Color.RED
    assert g.color(1, 0) == Color.RED
    assert g.is_fully_colored()


def test_uncolored_edge():
    g = from_edge_list("3 2\n0 1 u\n1 2 b\n")
    assert g.color(0, 1) == UNCOLORED
    assert not g.is_fully_colored()
    assert g.color(0, 2) is None


@pytest.mark.parametrize("text, line", [
    ("2 1\n0 0 r\n", 2),
    ("2 1\n0 2 r\n", 2),
    ("3 2\n0 1 r\n0 1 b\n", 3),
    ("2 1\n0 1 x\n", 2),
    ("2 1\n0 1\n", 2),
    ("2 2\n0 1 r\n", None),
    ("two 1\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphFormatError) as info:
        from_edge_list(text)
    if line is not None:
        assert info.value.line == line


def test_roundtrip_serialization():
    g = color_uniform(gnp(30, 0.3, seed=1), seed=2)
    buf = io.StringIO()
    write_edge_list(g, buf)
    assert from_edge_list(buf.getvalue()) == g


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 25), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_roundtrip_property(n, p, seed):
    g = color_uniform(gnp(n, p, seed), seed)
    assert from_edge_list(g.serialize()) == g


def test_gnp_seeded_and_plausible():
    a, b = gnp(200, 0.1, seed=4), gnp(200, 0.1, seed=4)
    assert a == b
    assert abs(a.m - 0.1 * 199 * 100) < 5 * np.sqrt(199 * 100 * 0.09)
    assert gnp(50, 0.0, seed=0).m == 0
    assert gnp(10, 1.0, seed=0).m == 45


def test_gnm_exact_count():
    g = gnm(40, 123, seed=9)
    assert g.m == 123


def test_masks_match_edges():
    g = color_uniform(gnp(20, 0.5, seed=3), seed=3)
    adj, red, blue = g.masks()
    for a, b, c in g.edges():
        assert (adj[a] >> b) & 1
        assert ((red if c == Color.RED else blue)[a] >> b) & 1
    assert sum(x.bit_count() for x in adj) == 2 * g.m


def test_induced_relabels():
    g = extremal_coloring(6)
    sub = g.induced([1, 3, 5])
    assert sub.n == 3 and sub.m == 3
    assert sub.color(0, 1) == Color.BLUE  # 1 lies in the blue side
    assert sub.color(1, 2) == Color.RED


def test_extremal_coloring_structure():
    g = extremal_coloring(9)
    assert g.m == 36
    assert all(c == (Color.BLUE if a < 3 else Color.RED) for a, b, c in g.edges())


def test_extremal_style_on_sparse_host():
    g = color_extremal_style(gnp(60, 0.3, seed=1))
    assert g.is_fully_colored()
    assert all((c == Color.BLUE) == (a < 20) for a, b, c in g.edges())


def test_greedy_coloring_is_split():
    g = color_greedy(gnp(60, 0.3, seed=1), seed=1)
    # the blue side never carries a red edge, so every blue edge touches it
    red_vertices = {x for a, b, c in g.edges() if c == Color.RED for x in (a, b)}
    for a, b, c in g.edges():
        if c == Color.BLUE:
            assert a not in red_vertices or b not in red_vertices


def test_monopath_conventions():
    assert MonoPath(Color.RED, []).length == -1
    assert MonoPath(Color.RED, [3]).length == 0
    g = complete_graph(4, Color.RED)
    MonoPath(Color.RED, [0, 1, 2, 3]).validate(g)
    with pytest.raises(InvalidPath):
        MonoPath(Color.BLUE, [0, 1]).validate(g)
    with pytest.raises(InvalidPath):
        MonoPath(Color.RED, [0, 1, 0]).validate(g)


def test_min_degree():
    assert min_degree(complete_graph(5)) == 4
    assert min_degree(ColoredGraph(3, [(0, 1, 1)])) == 0


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        ColoredGraph(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        ColoredGraph(3, [(0, 1, 1), (1, 0, 2)])
    with pytest.raises(ValueError):
        ColoredGraph(3, [(0, 5, 1)])
