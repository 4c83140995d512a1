"""Shared fixtures: the worked-example graphs and random-instance helpers."""

from __future__ import annotations

import numpy as np
import pytest

from netglue import Graph, build_graph
from netglue.gluing import BridgeSpec, bridge_glue

# 6-vertex and 4-vertex subsystem graphs from the large worked example,
# 0-indexed reconstructions of the published Laplacians.
EX2_G1_EDGES = [(0, 1), (0, 4), (0, 5), (1, 2), (2, 3), (2, 5), (3, 4), (3, 5)]
EX2_G2_EDGES = [(0, 1), (0, 3), (1, 2), (1, 3)]
# anchor pairs (vertex in G1, vertex in G2); published labels 2-7, 1-8, 3-10
EX2_BRIDGE_K1 = ((1, 0),)
EX2_BRIDGE_K3 = ((1, 0), (0, 1), (2, 3))

P3_EDGES = [(0, 1), (1, 2)]


@pytest.fixture
def p3() -> Graph:
    return build_graph(3, P3_EDGES)


@pytest.fixture
def ex2_g1() -> Graph:
    return build_graph(6, EX2_G1_EDGES)


@pytest.fixture
def ex2_g2() -> Graph:
    return build_graph(4, EX2_G2_EDGES)


@pytest.fixture
def ex2_k1(ex2_g1, ex2_g2):
    return bridge_glue(ex2_g1, ex2_g2, BridgeSpec(EX2_BRIDGE_K1))


@pytest.fixture
def ex2_k3(ex2_g1, ex2_g2):
    return bridge_glue(ex2_g1, ex2_g2, BridgeSpec(EX2_BRIDGE_K3))


def random_connected_graph(rng: np.random.Generator, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random spanning tree plus Bernoulli extra edges; always connected."""
    edges = {(int(rng.integers(0, i)), i) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_interface_pair(rng: np.random.Generator):
    """Connected (g1, g2) sharing an induced subgraph, plus the identification.

    g2 is grown around a copy of g1's interface so the induced-subgraph
    condition holds by construction; its non-interface vertices come first
    so the spanning structure can avoid adding interface-internal edges.
    """
    from netglue.gluing import InterfaceSpec

    n1 = int(rng.integers(3, 11))
    g1 = random_connected_graph(rng, n1)
    m = int(rng.integers(1, n1))
    y1 = tuple(int(v) for v in rng.choice(n1, size=m, replace=False))
    y_edges = {
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if g1.has_edge(y1[i], y1[j])
    }

    n2 = m + int(rng.integers(1, 6))
    rest = n2 - m  # vertices 0..rest-1 are non-interface, rest..n2-1 copy Y
    edges = {(rest + i, rest + j) for i, j in y_edges}
    for v in range(1, n2):
        if v < rest:
            edges.add((int(rng.integers(0, v)), v))
        else:
            edges.add((int(rng.integers(0, rest)), v))
    for u in range(n2):
        for v in range(u + 1, n2):
            if u >= rest and v >= rest:
                continue  # interface-internal edges are fixed by g1
            if (u, v) not in edges and rng.random() < 0.25:
                edges.add((u, v))
    g2 = build_graph(n2, sorted(edges))
    iface = InterfaceSpec(y1, tuple(range(rest, n2)))
    return g1, g2, iface
