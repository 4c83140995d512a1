"""Graph composition: bridge gluing and interface gluing.

Both operations produce a GlueResult carrying the combined graph together
with the vertex relabeling maps for each input, so callers can trace any
combined-graph vertex back to its origin. Layouts are deterministic:

  bridge:    G1 keeps indices 0..n1-1, G2 is offset by n1
  interface: G1 \\ Y first, then the shared Y vertices, then G2 \\ Y
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, build_graph


class GlueSpecError(ValueError):
    """Invalid bridge or interface specification."""


@dataclass(frozen=True)
class BridgeSpec:
    """k disjoint cross-graph anchor pairs (vertex in G1, vertex in G2)."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        left = [p[0] for p in self.pairs]
        right = [p[1] for p in self.pairs]
        if len(set(left)) != len(left):
            raise GlueSpecError(f"repeated G1-side anchor in {left}")
        if len(set(right)) != len(right):
            raise GlueSpecError(f"repeated G2-side anchor in {right}")

    @property
    def k(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class InterfaceSpec:
    """Identification map for a shared induced subgraph Y.

    Position i of y_in_g1 and y_in_g2 names the same vertex of Y.
    """

    y_in_g1: tuple[int, ...]
    y_in_g2: tuple[int, ...]

    def __post_init__(self):
        if len(self.y_in_g1) != len(self.y_in_g2):
            raise GlueSpecError(
                f"interface lists differ in length: {len(self.y_in_g1)} vs {len(self.y_in_g2)}"
            )
        if len(set(self.y_in_g1)) != len(self.y_in_g1):
            raise GlueSpecError(f"repeated vertex in G1 interface list {self.y_in_g1}")
        if len(set(self.y_in_g2)) != len(self.y_in_g2):
            raise GlueSpecError(f"repeated vertex in G2 interface list {self.y_in_g2}")

    @property
    def size(self) -> int:
        return len(self.y_in_g1)


@dataclass(frozen=True)
class GlueResult:
    """Combined graph plus injective vertex maps G1 -> combined, G2 -> combined.

    bridge_edges records the combined-graph bridge edges in the order they
    were added (empty for interface gluing); remove_bridge_edges consumes it.
    """

    graph: Graph
    map_g1: tuple[int, ...]
    map_g2: tuple[int, ...]
    bridge_edges: tuple[tuple[int, int], ...] = ()


def _check_anchor(g: Graph, v: int, side: str) -> None:
    if not (0 <= v < g.vertex_count):
        raise GlueSpecError(f"anchor {v} is not a vertex of {side}")


def bridge_glue(g1: Graph, g2: Graph, bridge: BridgeSpec) -> GlueResult:
    """Disjoint union of g1 and g2 plus one edge per anchor pair."""
    for u, v in bridge.pairs:
        _check_anchor(g1, u, "G1")
        _check_anchor(g2, v, "G2")
    n1 = g1.vertex_count
    bridge_edges = tuple((u, v + n1) for u, v in bridge.pairs)
    edges = list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges] + list(bridge_edges)
    combined = build_graph(n1 + g2.vertex_count, edges)
    return GlueResult(
        graph=combined,
        map_g1=tuple(range(n1)),
        map_g2=tuple(range(n1, n1 + g2.vertex_count)),
        bridge_edges=bridge_edges,
    )


def interface_glue(g1: Graph, g2: Graph, iface: InterfaceSpec) -> GlueResult:
    """Merge g1 and g2 by identifying the shared induced subgraph Y.

    Validates the induced-subgraph condition eagerly: every Y-internal edge
    must be present in both graphs or in neither.
    """
    for v in iface.y_in_g1:
        _check_anchor(g1, v, "G1")
    for v in iface.y_in_g2:
        _check_anchor(g2, v, "G2")
    m = iface.size
    for i in range(m):
        for j in range(i + 1, m):
            in1 = g1.has_edge(iface.y_in_g1[i], iface.y_in_g1[j])
            in2 = g2.has_edge(iface.y_in_g2[i], iface.y_in_g2[j])
            if in1 != in2:
                where, missing = ("G1", "G2") if in1 else ("G2", "G1")
                raise GlueSpecError(
                    f"interface edge between positions {i} and {j} exists in "
                    f"{where} but not in {missing}"
                )

    y1 = set(iface.y_in_g1)
    y2 = set(iface.y_in_g2)
    g1_rest = [v for v in range(g1.vertex_count) if v not in y1]
    g2_rest = [v for v in range(g2.vertex_count) if v not in y2]
    a1 = len(g1_rest)

    map_g1 = [0] * g1.vertex_count
    for idx, v in enumerate(g1_rest):
        map_g1[v] = idx
    for pos, v in enumerate(iface.y_in_g1):
        map_g1[v] = a1 + pos
    map_g2 = [0] * g2.vertex_count
    for pos, v in enumerate(iface.y_in_g2):
        map_g2[v] = a1 + pos
    for idx, v in enumerate(g2_rest):
        map_g2[v] = a1 + m + idx

    edges = {(min(map_g1[u], map_g1[v]), max(map_g1[u], map_g1[v])) for u, v in g1.edges}
    edges |= {(min(map_g2[u], map_g2[v]), max(map_g2[u], map_g2[v])) for u, v in g2.edges}
    combined = build_graph(a1 + m + len(g2_rest), sorted(edges))
    return GlueResult(graph=combined, map_g1=tuple(map_g1), map_g2=tuple(map_g2))


def remove_bridge_edges(result: GlueResult, count: int) -> GlueResult:
    """Drop `count` bridge edges from a glued result, last-added first."""
    if count < 0:
        raise GlueSpecError(f"count must be non-negative, got {count}")
    if count > len(result.bridge_edges):
        raise GlueSpecError(
            f"cannot remove {count} bridge edges, only {len(result.bridge_edges)} present"
        )
    if count == 0:
        return result
    keep = result.bridge_edges[: len(result.bridge_edges) - count]
    dropped = {(min(u, v), max(u, v)) for u, v in result.bridge_edges[len(keep):]}
    try:
        graph = build_graph(
            result.graph.vertex_count,
            [e for e in result.graph.edges if e not in dropped],
        )
    except GraphError as exc:  # pragma: no cover - edges came from a valid graph
        raise GlueSpecError(str(exc)) from exc
    return GlueResult(graph, result.map_g1, result.map_g2, keep)
