"""First-order consensus simulation: x' = -L x.

For a connected graph with symmetric Laplacian the states converge to the
mean of the initial conditions, and the disagreement (distance from the
consensus subspace) decays with time constant 1/λ₂. The time constant is
estimated from a least-squares fit of log(disagreement) over the decay
tail, which is far more robust than any single-crossing heuristic when the
early transient mixes several modes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .graph import Graph, GraphError, is_connected, laplacian
from .spectral import eig_sym, fiedler

EULER_STABILITY_FACTOR = 1.99
DEFAULT_DT_FACTOR = 0.1
TAIL_START_FRACTION = 0.1
TAIL_FLOOR = 1e-8
CONSERVATION_TOL = 1e-9


class StepSizeError(ValueError):
    """Requested step size exceeds the forward-Euler stability bound."""

    def __init__(self, dt: float, bound: float):
        super().__init__(
            f"dt={dt:g} exceeds the forward-Euler stability bound {bound:.6g}"
        )
        self.bound = bound


class DecayError(ValueError):
    """Trajectory did not decay enough for a reliable time-constant fit."""


@dataclass(frozen=True)
class SimConfig:
    dt: float
    horizon: float
    method: str = "rk4"

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.horizon < self.dt:
            raise ValueError(f"horizon {self.horizon} shorter than dt {self.dt}")
        if self.method not in ("rk4", "euler"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class Trajectory:
    times: NDArray[np.float64]
    states: NDArray[np.float64]
    consensus_value: float
    disagreement: NDArray[np.float64]


@dataclass(frozen=True)
class TimeConstantEstimate:
    tau_measured: float
    tau_predicted: float
    relative_error: float
    fit_window: tuple[float, float]


def default_config(g: Graph, horizon: float | None = None, method: str = "rk4") -> SimConfig:
    """Step size 0.1/λ_max; horizon long enough for two decades of decay."""
    report = fiedler(g)
    lam_max = float(report.eigenvalues[-1])
    lam2 = report.fiedler_value
    dt = DEFAULT_DT_FACTOR / lam_max if lam_max > 0 else 0.1
    if horizon is None:
        horizon = 12.0 / lam2 if lam2 > 1e-8 else 10.0
    return SimConfig(dt=dt, horizon=horizon, method=method)


def simulate(g: Graph, x0, cfg: SimConfig) -> Trajectory:
    """Integrate x' = -L x from x0 over cfg.horizon.

    Forward Euler is rejected when dt is beyond its stability bound
    1.99/λ_max; rk4 has no such guard.
    """
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (g.vertex_count,):
        raise GraphError(
            f"initial condition has length {x0.size}, graph has {g.vertex_count} vertices"
        )
    lmat = laplacian(g)
    if cfg.method == "euler":
        lam_max = float(eig_sym(lmat).values[-1])
        if lam_max > 0:
            bound = EULER_STABILITY_FACTOR / lam_max
            if cfg.dt > bound:
                raise StepSizeError(cfg.dt, bound)

    steps = int(round(cfg.horizon / cfg.dt))
    times = cfg.dt * np.arange(steps + 1)
    states = np.empty((steps + 1, g.vertex_count))
    states[0] = x0
    x = x0.copy()
    dt = cfg.dt
    for i in range(steps):
        if cfg.method == "euler":
            x = x - dt * (lmat @ x)
        else:
            k1 = -(lmat @ x)
            k2 = -(lmat @ (x + 0.5 * dt * k1))
            k3 = -(lmat @ (x + 0.5 * dt * k2))
            k4 = -(lmat @ (x + dt * k3))
            x = x + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
        states[i + 1] = x

    consensus_value = float(np.mean(x0))
    disagreement = np.linalg.norm(states - consensus_value, axis=1)
    return Trajectory(times, states, consensus_value, disagreement)


def estimate_time_constant(traj: Trajectory, g: Graph) -> TimeConstantEstimate:
    """Fit the decay tail of log(disagreement) and compare with 1/λ₂."""
    if not is_connected(g):
        raise GraphError("time constant undefined for a disconnected graph")
    lam2 = fiedler(g).fiedler_value
    tau_predicted = 1.0 / lam2

    d = traj.disagreement
    d0 = d[0]
    if d0 <= TAIL_FLOOR:
        raise DecayError("initial disagreement is already at the noise floor")
    if np.min(d) > 1e-2 * d0:
        raise DecayError(
            "disagreement decayed less than two decades; extend the horizon"
        )
    mask = (d <= TAIL_START_FRACTION * d0) & (d >= TAIL_FLOOR)
    idx = np.nonzero(mask)[0]
    if idx.size < 3:
        raise DecayError("decay tail too short for a log-linear fit")
    t = traj.times[idx]
    slope = np.polyfit(t, np.log(d[idx]), 1)[0]
    if slope >= 0:
        raise DecayError("disagreement tail is not decaying")
    tau_measured = -1.0 / slope
    return TimeConstantEstimate(
        tau_measured=tau_measured,
        tau_predicted=tau_predicted,
        relative_error=abs(tau_measured - tau_predicted) / tau_predicted,
        fit_window=(float(t[0]), float(t[-1])),
    )


@dataclass(frozen=True)
class ScenarioRow:
    label: str
    fiedler_value: float | None = None
    bound_value: float | None = None
    tau_predicted: float | None = None
    tau_measured: float | None = None
    consensus_value: float | None = None
    error: str | None = None


def compare_scenarios(
    scenarios, cfg: SimConfig | None = None, bounds=None
) -> list[ScenarioRow]:
    """One row per (label, graph, x0) scenario; failures stay in their row.

    bounds, when given, is a parallel list of bound values (or None) with
    gluing provenance, shown alongside the computed λ₂.
    """
    rows: list[ScenarioRow] = []
    for i, (label, g, x0) in enumerate(scenarios):
        bound = bounds[i] if bounds is not None else None
        try:
            config = cfg if cfg is not None else default_config(g)
            traj = simulate(g, x0, config)
            est = estimate_time_constant(traj, g)
            rows.append(
                ScenarioRow(
                    label=label,
                    fiedler_value=fiedler(g).fiedler_value,
                    bound_value=bound,
                    tau_predicted=est.tau_predicted,
                    tau_measured=est.tau_measured,
                    consensus_value=traj.consensus_value,
                )
            )
        except (ValueError, GraphError) as exc:
            rows.append(ScenarioRow(label=label, bound_value=bound, error=str(exc)))
    return rows


def format_comparison(rows: list[ScenarioRow]) -> str:
    """Aligned plain-text table of a compare_scenarios result."""
    header = ["scenario", "lambda2", "bound", "tau_pred", "tau_meas", "consensus"]
    body = []
    for r in rows:
        if r.error is not None:
            body.append([r.label, "error: " + r.error, "", "", "", ""])
            continue
        body.append(
            [
                r.label,
                f"{r.fiedler_value:.6g}",
                "" if r.bound_value is None else f"{r.bound_value:.6g}",
                f"{r.tau_predicted:.6g}",
                f"{r.tau_measured:.6g}",
                f"{r.consensus_value:.6g}",
            ]
        )
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(row, widths)).rstrip()
             for row in [header] + body]
    return "\n".join(lines)


def write_trajectory_csv(traj: Trajectory, path) -> None:
    """CSV export with header t,x0,...,x{N-1},disagreement, 9 significant digits."""
    n = traj.states.shape[1]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("t," + ",".join(f"x{i}" for i in range(n)) + ",disagreement\n")
        for t, row, d in zip(traj.times, traj.states, traj.disagreement):
            cells = [f"{t:.9g}"] + [f"{v:.9g}" for v in row] + [f"{d:.9g}"]
            fh.write(",".join(cells) + "\n")
