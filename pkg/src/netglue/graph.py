"""Undirected simple graphs and the matrix/cut primitives built on them.

Vertices are dense 0-indexed integers. Edges are stored canonically as
(min, max) pairs; construction is strict (self-loops, duplicates and
out-of-range endpoints are rejected rather than normalized away).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray


class GraphError(ValueError):
    """Invalid graph construction or vertex-set argument."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def neighbors(self, u: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return sorted(out)


def build_graph(vertex_count: int, edge_list) -> Graph:
    """Construct a Graph, validating every edge strictly.

    Raises GraphError on self-loops, out-of-range endpoints, or edges that
    collide after canonicalization to (min, max) order.
    """
    if vertex_count < 0:
        raise GraphError(f"vertex_count must be non-negative, got {vertex_count}")
    seen: set[tuple[int, int]] = set()
    canon: list[tuple[int, int]] = []
    for u, v in edge_list:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        canon.append(e)
    return Graph(vertex_count, tuple(sorted(canon)))


def adjacency(g: Graph) -> NDArray[np.float64]:
    a = np.zeros((g.vertex_count, g.vertex_count))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def degrees(g: Graph) -> NDArray[np.float64]:
    d = np.zeros(g.vertex_count)
    for u, v in g.edges:
        d[u] += 1.0
        d[v] += 1.0
    return d


def laplacian(g: Graph) -> NDArray[np.float64]:
    """Laplacian L = D - A: symmetric, zero row sums, diag = degrees."""
    return np.diag(degrees(g)) - adjacency(g)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0. Undefined for N = 0."""
    if g.vertex_count == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def _check_subset(g: Graph, s: frozenset[int] | set[int], name: str) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"{name} contains vertex {v} outside the graph")
    return s


def cut(g: Graph, s1, s2) -> int:
    """Number of edges with one endpoint in s1 and the other in s2.

    The sets must be nonempty and disjoint.
    """
    s1 = _check_subset(g, s1, "s1")
    s2 = _check_subset(g, s2, "s2")
    if not s1 or not s2:
        raise GraphError("cut requires nonempty vertex sets")
    if s1 & s2:
        raise GraphError(f"cut requires disjoint sets, overlap {sorted(s1 & s2)}")
    return sum(1 for u, v in g.edges if (u in s1 and v in s2) or (u in s2 and v in s1))


def complement_set(g: Graph, s) -> frozenset[int]:
    """V(g) minus s."""
    s = _check_subset(g, s, "s")
    return frozenset(range(g.vertex_count)) - s
