"""netglue: graph gluing, algebraic connectivity bounds, consensus simulation."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, build_graph, complement_set, cut, is_connected, laplacian
from .gluing import (
    BridgeSpec,
    GlueResult,
    GlueSpecError,
    InterfaceSpec,
    bridge_glue,
    interface_glue,
    remove_bridge_edges,
)
from .spectral import (
    BlockDecomposition,
    SpectralReport,
    block_decompose,
    eig_sym,
    fiedler,
    grounded_smallest_eig,
)
from .bounds import (
    BoundReport,
    DisconnectedInputError,
    bridge_bound,
    cut_bound,
    verify_bridge_bound,
    verify_interface_bound,
)
from .sim import (
    SimConfig,
    StepSizeError,
    Trajectory,
    TimeConstantEstimate,
    compare_scenarios,
    default_config,
    estimate_time_constant,
    simulate,
    write_trajectory_csv,
)

__all__ = [
    "Graph", "GraphError", "build_graph", "laplacian", "is_connected", "cut",
    "complement_set",
    "BridgeSpec", "InterfaceSpec", "GlueResult", "GlueSpecError",
    "bridge_glue", "interface_glue", "remove_bridge_edges",
    "SpectralReport", "BlockDecomposition", "eig_sym", "fiedler",
    "block_decompose", "grounded_smallest_eig",
    "BoundReport", "DisconnectedInputError", "cut_bound", "bridge_bound",
    "verify_bridge_bound", "verify_interface_bound",
    "SimConfig", "Trajectory", "TimeConstantEstimate", "StepSizeError",
    "simulate", "estimate_time_constant", "compare_scenarios",
    "default_config", "write_trajectory_csv",
]
