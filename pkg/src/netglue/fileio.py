"""Text file formats: graph files and scenario files.

Graph file, one record per line:

    graph <N>
    edge <u> <v>

Scenario file, line-oriented key-value:

    graph1 <path>          required
    graph2 <path>          required for glue/bounds
    op bridge|interface    required for glue/bounds
    pair <u> <v>           repeated; anchors for bridge, identified
                           vertices (g1-vertex, g2-vertex) for interface
    x0 <v0> <v1> ...       initial condition for the simulated graph
    dt <real>              optional
    horizon <real>         optional
    method euler|rk4       optional

`#` starts a comment in both formats; relative paths in a scenario are
resolved against the scenario file's directory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .graph import Graph, GraphError, build_graph


class FileFormatError(ValueError):
    def __init__(self, message: str, path, line: int):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph_text(text: str, path="<string>", one_indexed: bool = False) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    shift = 1 if one_indexed else 0
    for lineno, fields in _records(text):
        kind = fields[0]
        if kind == "graph":
            if n is not None:
                raise FileFormatError("duplicate graph header", path, lineno)
            if len(fields) != 2:
                raise FileFormatError("expected `graph <N>`", path, lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise FileFormatError(f"bad vertex count {fields[1]!r}", path, lineno)
        elif kind == "edge":
            if n is None:
                raise FileFormatError("edge before graph header", path, lineno)
            if len(fields) != 3:
                raise FileFormatError("expected `edge <u> <v>`", path, lineno)
            try:
                u, v = int(fields[1]) - shift, int(fields[2]) - shift
            except ValueError:
                raise FileFormatError("edge endpoints must be integers", path, lineno)
            edges.append((u, v))
        else:
            raise FileFormatError(f"unknown record {kind!r}", path, lineno)
    if n is None:
        raise FileFormatError("missing `graph <N>` header", path, 1)
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FileFormatError(str(exc), path, 1) from exc


def parse_graph_file(path, one_indexed: bool = False) -> Graph:
    path = Path(path)
    return parse_graph_text(path.read_text(encoding="utf-8"), path, one_indexed)


def graph_to_text(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines += [f"edge {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def write_graph_file(g: Graph, path) -> None:
    Path(path).write_text(graph_to_text(g), encoding="utf-8")


@dataclass
class Scenario:
    graph1: Path
    graph2: Path | None = None
    op: str | None = None
    pairs: list[tuple[int, int]] = field(default_factory=list)
    x0: list[float] | None = None
    dt: float | None = None
    horizon: float | None = None
    method: str = "rk4"


def parse_scenario_file(path, one_indexed: bool = False) -> Scenario:
    path = Path(path)
    base = path.parent
    shift = 1 if one_indexed else 0
    graph1 = graph2 = None
    op = None
    pairs: list[tuple[int, int]] = []
    x0 = None
    dt = horizon = None
    method = "rk4"
    for lineno, fields in _records(path.read_text(encoding="utf-8")):
        key, args = fields[0], fields[1:]
        try:
            if key == "graph1":
                graph1 = base / " ".join(args)
            elif key == "graph2":
                graph2 = base / " ".join(args)
            elif key == "op":
                (op,) = args
                if op not in ("bridge", "interface"):
                    raise FileFormatError(f"unknown op {op!r}", path, lineno)
            elif key == "pair":
                u, v = (int(a) - shift for a in args)
                pairs.append((u, v))
            elif key == "x0":
                x0 = [float(a) for a in args]
            elif key == "dt":
                (dt,) = (float(a) for a in args)
            elif key == "horizon":
                (horizon,) = (float(a) for a in args)
            elif key == "method":
                (method,) = args
                if method not in ("euler", "rk4"):
                    raise FileFormatError(f"unknown method {method!r}", path, lineno)
            else:
                raise FileFormatError(f"unknown key {key!r}", path, lineno)
        except (ValueError, TypeError) as exc:
            if isinstance(exc, FileFormatError):
                raise
            raise FileFormatError(f"bad value for {key!r}: {exc}", path, lineno) from exc
    if graph1 is None:
        raise FileFormatError("scenario needs a graph1 entry", path, 1)
    if op is not None and graph2 is None:
        raise FileFormatError("glue scenario needs a graph2 entry", path, 1)
    return Scenario(
        graph1=graph1, graph2=graph2, op=op, pairs=pairs,
        x0=x0, dt=dt, horizon=horizon, method=method,
    )
