"""Analytical upper bounds on the Fiedler eigenvalue.

Three bound kinds are reported:

  cut       λ₂ ≤ cut(S1, S1c)/|S1| + cut(S2, S2c)/|S2|  for disjoint
            nonempty S1, S2
  bridge    λ₂ ≤ k/n1 + k/n2 for a k-edge bridge gluing
  interface λ₂ ≤ max of the two grounded-Laplacian smallest eigenvalues

The interface bound uses max{λ₁(A₁), λ₁(A₂)}; the bound statement is
sometimes quoted with λ₂(A₂) in the second slot, but the grounded smallest
eigenvalue is the quantity the Poincaré min-max argument actually controls,
and the report notes this.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, complement_set, cut, is_connected
from .gluing import BridgeSpec, GlueResult, InterfaceSpec, bridge_glue, interface_glue
from .spectral import block_decompose, fiedler, grounded_smallest_eig

SLACK_TOL = 1e-9

INTERFACE_NOTE = "bound form: max of grounded smallest eigenvalues"


class DisconnectedInputError(ValueError):
    """Interface bound requires connected inputs (grounded blocks must be PD)."""


@dataclass(frozen=True)
class BoundReport:
    bound_kind: str
    bound_value: float
    fiedler_value: float
    slack: float
    satisfied: bool
    note: str = field(default="")

    @staticmethod
    def make(kind: str, bound_value: float, fiedler_value: float, note: str = "") -> "BoundReport":
        slack = bound_value - fiedler_value
        return BoundReport(
            bound_kind=kind,
            bound_value=bound_value,
            fiedler_value=fiedler_value,
            slack=slack,
            satisfied=slack >= -SLACK_TOL,
            note=note,
        )


def cut_bound(g: Graph, s1, s2) -> BoundReport:
    """Cut-based upper bound for two disjoint nonempty vertex sets."""
    s1, s2 = frozenset(s1), frozenset(s2)
    if not s1 or not s2:
        raise GraphError("cut bound requires nonempty sets")
    if s1 & s2:
        raise GraphError(f"cut bound requires disjoint sets, overlap {sorted(s1 & s2)}")
    # complements are nonempty: each contains the other set
    b1 = cut(g, s1, complement_set(g, s1)) / len(s1)
    b2 = cut(g, s2, complement_set(g, s2)) / len(s2)
    return BoundReport.make("cut", b1 + b2, fiedler(g).fiedler_value)


def bridge_bound(n1: int, n2: int, k: int) -> float:
    """k/n1 + k/n2 for a k-edge bridge between graphs of n1 and n2 vertices."""
    if n1 < 1 or n2 < 1:
        raise GraphError(f"graph sizes must be positive, got {n1}, {n2}")
    if k < 0:
        raise GraphError(f"bridge edge count must be non-negative, got {k}")
    return k / n1 + k / n2


def verify_bridge_bound(g1: Graph, g2: Graph, bridge: BridgeSpec) -> BoundReport:
    """Glue, compute the combined λ₂, and compare with the bridge bound."""
    result = bridge_glue(g1, g2, bridge)
    bound = bridge_bound(g1.vertex_count, g2.vertex_count, bridge.k)
    return BoundReport.make("bridge", bound, fiedler(result.graph).fiedler_value)


def verify_interface_bound(g1: Graph, g2: Graph, iface: InterfaceSpec) -> BoundReport:
    """Glue along the interface and compare λ₂ with the grounded-eigenvalue bound."""
    for name, g in (("G1", g1), ("G2", g2)):
        if not is_connected(g):
            raise DisconnectedInputError(
                f"{name} is disconnected; the grounded block is not positive "
                "definite so the interface bound does not apply"
            )
    result = interface_glue(g1, g2, iface)
    lam1 = grounded_smallest_eig(block_decompose(g1, iface.y_in_g1))
    lam2 = grounded_smallest_eig(block_decompose(g2, iface.y_in_g2))
    bound = max(lam1, lam2)
    return BoundReport.make(
        "interface", bound, fiedler(result.graph).fiedler_value, note=INTERFACE_NOTE
    )


def glued_interface(g1: Graph, g2: Graph, iface: InterfaceSpec) -> GlueResult:
    """Convenience re-export so callers get the same glued graph the bound used."""
    return interface_glue(g1, g2, iface)
