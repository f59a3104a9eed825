import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monopath.graph import Color, ColoredGraph, color_uniform, complete_graph, gnp
from monopath.oracle import longest_in_color_length
from monopath.splitter import (EXTEND, RETIRE, START, PreconditionError, bipartite_cut,
                               check_certificate, split)


def star(leaves: int) -> ColoredGraph:
    return ColoredGraph(leaves + 1, [(0, i, 1) for i in range(1, leaves + 1)])


def test_empty_graph():
    U, W, spine = split(ColoredGraph(4)).as_sets()
    assert U == {2, 3} and W == {0, 1} and spine == []


def test_complete_graph_spine_is_everything():
    cert = split(complete_graph(5))
    assert cert.spine.tolist() == [0, 1, 2, 3, 4]
    assert len(cert.U) == len(cert.W) == 0


def test_star_reference_trace():
    cert = split(star(4))
    assert cert.ops.tolist() == [START, EXTEND, RETIRE, EXTEND, RETIRE]
    assert cert.op_vertices.tolist() == [0, 1, 1, 2, 2]
    assert cert.as_sets() == ({3, 4}, {1, 2}, [0])


def test_step_count_is_n():
    # every vertex leaving U costs one step, each retirement one more
    for seed in range(5):
        g = gnp(37, 0.1, seed=seed)
        cert = split(g)
        assert cert.steps == len(cert.spine) + 2 * len(cert.W) == 37


@pytest.mark.parametrize("n", [1, 2, 5, 30, 70, 300])
def test_backends_agree(n):
    g = gnp(n, 0.08, seed=n)
    a = split(g, backend="mask")
    b = split(g, backend="csr")
    for field in ("U", "W", "spine", "ops", "op_vertices"):
        assert np.array_equal(getattr(a, field), getattr(b, field))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 64), st.sampled_from([0.05, 0.2, 0.5, 0.9]), st.integers(0, 2**32 - 1))
def test_certificate_invariants(n, p, seed):
    g = gnp(n, p, seed)
    cert = split(g)
    assert check_certificate(g, cert) == []


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 40), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1),
       st.sampled_from([Color.RED, Color.BLUE]))
def test_color_and_subset_restriction(n, p, seed, color):
    g = color_uniform(gnp(n, p, seed), seed)
    rng = np.random.default_rng(seed)
    subset = np.flatnonzero(rng.random(n) < 0.6)
    cert = split(g, color=color, vertices=subset)
    assert check_certificate(g, cert, color=color, vertices=subset) == []
    csr = split(g, color=color, vertices=subset, backend="csr")
    assert np.array_equal(cert.spine, csr.spine)


def test_check_certificate_detects_tampering():
    g = gnp(20, 0.2, seed=1)
    cert = split(g)
    bad = type(cert)(cert.W, cert.U[:-1], cert.spine, cert.ops, cert.op_vertices)
    assert check_certificate(g, bad)


def random_bipartite(half: int, p: float, seed: int):
    rng = np.random.default_rng(seed)
    edges = [(i, half + j, 1) for i in range(half) for j in range(half) if rng.random() < p]
    return ColoredGraph(2 * half, edges), list(range(half)), list(range(half, 2 * half))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
def test_bipartite_cut_bound(half, p, seed):
    g, V1, V2 = random_bipartite(half, p, seed)
    X1, X2, spine = bipartite_cut(g, V1, V2)
    assert len(X1) == len(X2)
    assert set(X1.tolist()) <= set(V1) and set(X2.tolist()) <= set(V2)
    xs, ys = set(X1.tolist()), set(X2.tolist())
    assert not any((a in xs and b in ys) or (a in ys and b in xs) for a, b, _ in g.edges())
    adj, _, _ = g.masks()
    k = longest_in_color_length(g.n, adj)
    assert len(X1) >= -(-(g.n - k) // 4) - 1


def test_bipartite_cut_preconditions():
    g, V1, V2 = random_bipartite(3, 0.5, 0)
    with pytest.raises(PreconditionError):
        bipartite_cut(g, V1, V2[:-1])
    inside = ColoredGraph(4, [(0, 1, 1)])
    with pytest.raises(PreconditionError):
        bipartite_cut(inside, [0, 1], [2, 3])
