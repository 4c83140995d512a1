import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netglue import (
    GraphError,
    build_graph,
    complement_set,
    cut,
    is_connected,
    laplacian,
)
from netglue.spectral import eig_sym


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return build_graph(n, sorted(edges))


class TestBuildGraph:
    def test_path(self, p3):
        assert p3.vertex_count == 3
        assert p3.edges == ((0, 1), (1, 2))

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.vertex_count == 1 and g.edge_count == 0

    def test_canonicalization_collision(self):
        with pytest.raises(GraphError, match="duplicate"):
            build_graph(3, [(0, 1), (1, 0)])

    def test_self_loop(self):
        with pytest.raises(GraphError, match="self-loop"):
            build_graph(3, [(1, 1)])

    def test_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            build_graph(3, [(0, 3)])

    def test_negative_vertex_count(self):
        with pytest.raises(GraphError):
            build_graph(-1, [])


class TestLaplacian:
    def test_p3_matrix(self, p3):
        expected = np.array([[1, -1, 0], [-1, 2, -1], [0, -1, 1]], dtype=float)
        assert np.array_equal(laplacian(p3), expected)

    def test_edgeless(self):
        assert np.array_equal(laplacian(build_graph(4, [])), np.zeros((4, 4)))

    def test_ex2_combined_one_bridge(self, ex2_k1):
        # published 10x10 Laplacian of the one-bridge combined graph
        expected = np.array(
            [
                [3, -1, 0, 0, -1, -1, 0, 0, 0, 0],
                [-1, 3, -1, 0, 0, 0, -1, 0, 0, 0],
                [0, -1, 3, -1, 0, -1, 0, 0, 0, 0],
                [0, 0, -1, 3, -1, -1, 0, 0, 0, 0],
                [-1, 0, 0, -1, 2, 0, 0, 0, 0, 0],
                [-1, 0, -1, -1, 0, 3, 0, 0, 0, 0],
                [0, -1, 0, 0, 0, 0, 3, -1, 0, -1],
                [0, 0, 0, 0, 0, 0, -1, 3, -1, -1],
                [0, 0, 0, 0, 0, 0, 0, -1, 1, 0],
                [0, 0, 0, 0, 0, 0, -1, -1, 0, 2],
            ],
            dtype=float,
        )
        assert np.array_equal(laplacian(ex2_k1.graph), expected)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_row_sums_and_symmetry(self, g):
        lap = laplacian(g)
        assert np.allclose(lap.sum(axis=1), 0.0, atol=1e-12)
        assert np.array_equal(lap, lap.T)
        assert np.array_equal(np.diag(lap), [len(g.neighbors(v)) for v in range(g.vertex_count)])

    @given(graphs(min_n=1, max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_positive_semidefinite(self, g):
        assert eig_sym(laplacian(g)).values.min(initial=0.0) >= -1e-9


class TestConnectivity:
    def test_p3_connected(self, p3):
        assert is_connected(p3)

    def test_two_disjoint_edges(self):
        assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))

    def test_ex2_combined(self, ex2_k1):
        assert is_connected(ex2_k1.graph)

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            is_connected(build_graph(0, []))

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_zero_eigenvalue_multiplicity(self, g):
        values = eig_sym(laplacian(g)).values
        zero_mult = int(np.sum(np.abs(values) <= 1e-8))
        assert is_connected(g) == (zero_mult == 1)


class TestCut:
    def test_ex2_example_partitions(self, ex2_k1, ex2_k3):
        s1, s2 = set(range(6)), set(range(6, 10))
        assert cut(ex2_k1.graph, s1, s2) == 1
        assert cut(ex2_k3.graph, s1, s2) == 3

    def test_separate_components(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        assert cut(g, {0, 1}, {2, 3}) == 0

    def test_overlap_rejected(self, p3):
        with pytest.raises(GraphError, match="disjoint"):
            cut(p3, {0, 1}, {1, 2})

    def test_empty_rejected(self, p3):
        with pytest.raises(GraphError, match="nonempty"):
            cut(p3, set(), {1})

    @given(graphs(min_n=2, max_n=8), st.data())
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force_boundary_count(self, g, data):
        s = data.draw(
            st.sets(st.integers(0, g.vertex_count - 1), min_size=1, max_size=g.vertex_count - 1)
        )
        sc = complement_set(g, s)
        brute = sum(1 for u, v in g.edges if (u in s) != (v in s))
        assert cut(g, s, sc) == brute


class TestComplementSet:
    def test_basic(self, p3):
        assert complement_set(p3, {0}) == {1, 2}

    def test_full_set(self, p3):
        assert complement_set(p3, {0, 1, 2}) == frozenset()

    def test_ex2(self, ex2_k1):
        assert complement_set(ex2_k1.graph, set(range(6))) == set(range(6, 10))
