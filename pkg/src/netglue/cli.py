"""Command-line front end.

Subcommands: analyze, glue, bounds, simulate. Exit codes are scriptable:

    0  success
    1  a theorem bound was violated (internal bug indicator)
    2  file parse failure or missing scenario data
    3  domain error (e.g. Fiedler value requested for N < 2)
    4  invalid bridge/interface specification
    5  precondition failure (e.g. disconnected interface inputs)
    6  forward-Euler step size beyond the stability bound
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import DisconnectedInputError, bridge_bound, verify_bridge_bound, verify_interface_bound
from .fileio import (
    FileFormatError,
    Scenario,
    parse_graph_file,
    parse_scenario_file,
    write_graph_file,
)
from .graph import Graph, GraphError, build_graph, is_connected
from .gluing import BridgeSpec, GlueResult, GlueSpecError, InterfaceSpec, bridge_glue, interface_glue
from .sim import (
    SimConfig,
    StepSizeError,
    compare_scenarios,
    default_config,
    estimate_time_constant,
    format_comparison,
    simulate,
    write_trajectory_csv,
)
from .spectral import fiedler

EXIT_BOUND_VIOLATED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_SPEC = 4
EXIT_PRECONDITION = 5
EXIT_STABILITY = 6


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _vec(v) -> str:
    return " ".join(_fmt(x) for x in v)


def _glue(scenario: Scenario, g1: Graph, g2: Graph, relaxed: bool = False) -> GlueResult:
    if scenario.op == "bridge":
        if relaxed:
            # emulate shared anchors by composing single-edge bridges
            result = bridge_glue(g1, g2, BridgeSpec(()))
            for u, v in scenario.pairs:
                step = bridge_glue(g1, g2, BridgeSpec(((u, v),)))
                edge = step.bridge_edges[0]
                if edge in result.bridge_edges:
                    raise GlueSpecError(f"duplicate bridge pair ({u}, {v})")
                result = GlueResult(
                    build_graph(result.graph.vertex_count, result.graph.edges + (edge,)),
                    result.map_g1,
                    result.map_g2,
                    result.bridge_edges + (edge,),
                )
            return result
        return bridge_glue(g1, g2, BridgeSpec(tuple(scenario.pairs)))
    y1 = tuple(u for u, _ in scenario.pairs)
    y2 = tuple(v for _, v in scenario.pairs)
    return interface_glue(g1, g2, InterfaceSpec(y1, y2))


def cmd_analyze(args) -> int:
    g = parse_graph_file(args.graph, one_indexed=args.one_indexed)
    report = fiedler(g)
    print(f"n {g.vertex_count}")
    print(f"edges {g.edge_count}")
    print(f"connected {'true' if is_connected(g) else 'false'}")
    print(f"eigenvalues {_vec(report.eigenvalues)}")
    print(f"fiedler_value {_fmt(report.fiedler_value)}")
    print(f"fiedler_vector {_vec(report.fiedler_vector)}")
    print(f"zero_multiplicity {report.zero_multiplicity}")
    return 0


def cmd_glue(args) -> int:
    scenario = parse_scenario_file(args.scenario, one_indexed=args.one_indexed)
    if scenario.op is None:
        raise FileFormatError("scenario has no op entry", args.scenario, 1)
    g1 = parse_graph_file(scenario.graph1, one_indexed=args.one_indexed)
    g2 = parse_graph_file(scenario.graph2, one_indexed=args.one_indexed)
    result = _glue(scenario, g1, g2, relaxed=args.allow_repeated_anchors)
    print(f"op {scenario.op}")
    print(f"vertices {result.graph.vertex_count}")
    print(f"edges {result.graph.edge_count}")
    print(f"map_g1 {' '.join(str(i) for i in result.map_g1)}")
    print(f"map_g2 {' '.join(str(i) for i in result.map_g2)}")
    if args.output:
        write_graph_file(result.graph, args.output)
        print(f"written {args.output}")
    else:
        from .fileio import graph_to_text

        sys.stdout.write(graph_to_text(result.graph))
    return 0


def _print_bound(report) -> None:
    print(f"bound_kind {report.bound_kind}")
    print(f"bound_value {_fmt(report.bound_value)}")
    print(f"fiedler_value {_fmt(report.fiedler_value)}")
    print(f"slack {_fmt(report.slack)}")
    print(f"satisfied {'true' if report.satisfied else 'false'}")
    if report.note:
        print(f"note {report.note}")


def cmd_bounds(args) -> int:
    scenario = parse_scenario_file(args.scenario, one_indexed=args.one_indexed)
    if scenario.op is None:
        raise FileFormatError("scenario has no op entry", args.scenario, 1)
    g1 = parse_graph_file(scenario.graph1, one_indexed=args.one_indexed)
    g2 = parse_graph_file(scenario.graph2, one_indexed=args.one_indexed)
    if scenario.op == "bridge":
        report = verify_bridge_bound(g1, g2, BridgeSpec(tuple(scenario.pairs)))
    else:
        y1 = tuple(u for u, _ in scenario.pairs)
        y2 = tuple(v for _, v in scenario.pairs)
        report = verify_interface_bound(g1, g2, InterfaceSpec(y1, y2))
    _print_bound(report)
    return 0 if report.satisfied else EXIT_BOUND_VIOLATED


def _build_config(scenario: Scenario, g: Graph) -> SimConfig:
    base = default_config(g, horizon=scenario.horizon, method=scenario.method)
    dt = scenario.dt if scenario.dt is not None else base.dt
    return SimConfig(dt=dt, horizon=base.horizon, method=scenario.method)


def cmd_simulate(args) -> int:
    scenario = parse_scenario_file(args.scenario, one_indexed=args.one_indexed)
    g1 = parse_graph_file(scenario.graph1, one_indexed=args.one_indexed)
    if scenario.op is not None:
        g2 = parse_graph_file(scenario.graph2, one_indexed=args.one_indexed)
        result = _glue(scenario, g1, g2)
        g = result.graph
    else:
        result = None
        g = g1
    if scenario.x0 is None:
        raise FileFormatError("scenario has no x0 entry", args.scenario, 1)
    x0 = np.asarray(scenario.x0, dtype=float)
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)

    if args.compare:
        if result is None:
            raise FileFormatError(
                "--compare needs a glue scenario (graph2 and op)", args.scenario, 1
            )
        scenarios = [
            ("graph1", g1, x0[list(result.map_g1)]),
            ("graph2", parse_graph_file(scenario.graph2, one_indexed=args.one_indexed),
             x0[list(result.map_g2)]),
            ("combined", g, x0),
        ]
        bound = None
        if scenario.op == "bridge":
            bound = bridge_bound(g1.vertex_count, scenarios[1][1].vertex_count,
                                 len(scenario.pairs))
        rows = compare_scenarios(scenarios, bounds=[None, None, bound])
        for label, graph, x0_part in scenarios:
            cfg = _build_config(scenario, graph)
            traj = simulate(graph, x0_part, cfg)
            write_trajectory_csv(traj, outdir / f"trajectory_{label}.csv")
        print(format_comparison(rows))
        return 0

    cfg = _build_config(scenario, g)
    traj = simulate(g, x0, cfg)
    csv_path = outdir / "trajectory.csv"
    write_trajectory_csv(traj, csv_path)
    est = estimate_time_constant(traj, g)
    print(f"consensus_value {_fmt(traj.consensus_value)}")
    print(f"tau_predicted {_fmt(est.tau_predicted)}")
    print(f"tau_measured {_fmt(est.tau_measured)}")
    print(f"relative_error {_fmt(est.relative_error)}")
    print(f"written {csv_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netglue",
        description="Graph gluing, Fiedler eigenvalue bounds, and consensus simulation.",
    )
    parser.add_argument("--version", action="version", version=f"netglue {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--one-indexed",
            action="store_true",
            help="treat vertex labels in input files as 1-indexed",
        )

    p = sub.add_parser("analyze", help="spectral report for a graph file")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("glue", help="run a gluing scenario, emit the combined graph")
    p.add_argument("scenario")
    p.add_argument("-o", "--output", help="write combined graph to this file")
    p.add_argument(
        "--allow-repeated-anchors",
        action="store_true",
        help="let one vertex anchor several bridge edges",
    )
    common(p)
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("bounds", help="verify the Fiedler upper bound for a scenario")
    p.add_argument("scenario")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("simulate", help="simulate consensus dynamics for a scenario")
    p.add_argument("scenario")
    p.add_argument("-o", "--output", default=".", help="output directory for CSV files")
    p.add_argument(
        "--compare",
        action="store_true",
        help="compare graph1, graph2 and the combined graph",
    )
    common(p)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GlueSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except DisconnectedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except StepSizeError as exc:
        print(f"error: {exc} (suggested dt: {exc.bound:.6g})", file=sys.stderr)
        return EXIT_STABILITY
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
