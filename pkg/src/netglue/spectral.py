"""Dense symmetric eigensolver and Fiedler-value extraction.

The eigensolver is a cyclic Jacobi sweep: plane rotations zero the
off-diagonal entries until the off-diagonal Frobenius norm falls below
1e-12 times the matrix norm (at most 100 sweeps). That is plenty for the
desk-scale matrices this package targets and keeps the numerical kernel
fully inspectable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit
from numpy.typing import NDArray

from .graph import Graph, GraphError, laplacian

SYMMETRY_TOL = 1e-10
ZERO_EIG_TOL = 1e-8
OFFDIAG_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the off-diagonal tolerance."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )
        self.residual = residual


@dataclass(frozen=True)
class EigResult:
    """Eigenvalues sorted ascending; vectors[:, i] pairs with values[i]."""

    values: NDArray[np.float64]
    vectors: NDArray[np.float64]


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: NDArray[np.float64]
    fiedler_value: float
    fiedler_vector: NDArray[np.float64]
    zero_multiplicity: int

    @property
    def connected(self) -> bool:
        return self.zero_multiplicity == 1 and self.fiedler_value > ZERO_EIG_TOL


@dataclass(frozen=True)
class BlockDecomposition:
    """Laplacian blocks [A B; B^T D] with the interface vertices last.

    non_interface and interface record the vertex order of the permutation,
    so [A B; B^T D] under that order reproduces L(g) exactly.
    """

    a_block: NDArray[np.float64]
    b_block: NDArray[np.float64]
    d_block: NDArray[np.float64]
    non_interface: tuple[int, ...]
    interface: tuple[int, ...]


@njit(cache=True)
def _jacobi_sweeps(a, v, threshold, max_sweeps):  # pragma: no cover - jitted
    """Cyclic Jacobi rotations in place; returns sweep count or -1."""
    n = a.shape[0]
    sweeps = 0
    while True:
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        off = np.sqrt(off)
        if off <= threshold:
            return sweeps
        if sweeps >= max_sweeps:
            return -1
        sweeps += 1
        skip = threshold / (n * n)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    aip, aiq = a[p, i], a[q, i]
                    a[p, i] = c * aip - s * aiq
                    a[q, i] = s * aip + c * aiq
                for i in range(n):
                    aip, aiq = a[i, p], a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    vip, viq = v[i, p], v[i, q]
                    v[i, p] = c * vip - s * viq
                    v[i, q] = s * vip + c * viq


def eig_sym(m: NDArray[np.float64]) -> EigResult:
    """Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return EigResult(np.zeros(0), np.zeros((0, 0)))
    norm = np.linalg.norm(a)
    if np.max(np.abs(a - a.T)) > SYMMETRY_TOL * max(1.0, norm):
        raise ValueError("matrix is not symmetric")
    a = 0.5 * (a + a.T)

    v = np.eye(n)
    if norm == 0.0:
        return EigResult(np.zeros(n), v)

    sweeps = _jacobi_sweeps(a, v, OFFDIAG_TOL * norm, MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(float(np.linalg.norm(a - np.diag(np.diag(a)))), MAX_SWEEPS)

    order = np.argsort(np.diag(a), kind="stable")
    return EigResult(np.diag(a)[order].copy(), v[:, order].copy())


# warm the jit cache so callers never pay compile time mid-computation
_jacobi_sweeps(np.array([[1.0, 0.5], [0.5, 1.0]]), np.eye(2), 1e-12, MAX_SWEEPS)


def _sign_normalize(vec: NDArray[np.float64]) -> NDArray[np.float64]:
    for x in vec:
        if abs(x) > ZERO_EIG_TOL:
            return vec if x > 0 else -vec
    return vec


@lru_cache(maxsize=8192)
def fiedler(g: Graph) -> SpectralReport:
    """Fiedler eigenvalue and vector of g's Laplacian. Requires N >= 2.

    Graphs are immutable, so results are memoized; treat the arrays in the
    returned report as read-only.
    """
    if g.vertex_count < 2:
        raise GraphError(f"Fiedler value undefined for {g.vertex_count} vertices")
    eig = eig_sym(laplacian(g))
    values = eig.values
    return SpectralReport(
        eigenvalues=values,
        fiedler_value=float(values[1]),
        fiedler_vector=_sign_normalize(eig.vectors[:, 1].copy()),
        zero_multiplicity=int(np.sum(np.abs(values) <= ZERO_EIG_TOL)),
    )


def block_decompose(g: Graph, y) -> BlockDecomposition:
    """Permute L(g) so non-interface vertices come first and slice the blocks.

    y must be a nonempty proper subset of V(g): the layout is
    [A B; B^T D] with D indexed by y.
    """
    y = tuple(dict.fromkeys(int(v) for v in y))
    for v in y:
        if not (0 <= v < g.vertex_count):
            raise GraphError(f"interface vertex {v} outside the graph")
    if not y:
        raise GraphError("interface set must be nonempty")
    if len(y) == g.vertex_count:
        raise GraphError("interface set must be a proper subset of the vertices")
    rest = tuple(v for v in range(g.vertex_count) if v not in set(y))
    order = rest + y
    lp = laplacian(g)[np.ix_(order, order)]
    a = len(rest)
    return BlockDecomposition(
        a_block=lp[:a, :a],
        b_block=lp[:a, a:],
        d_block=lp[a:, a:],
        non_interface=rest,
        interface=y,
    )


def grounded_smallest_eig(d: BlockDecomposition) -> float:
    """Smallest eigenvalue of the grounded Laplacian block A."""
    if d.a_block.size == 0:
        raise GraphError("grounded block is empty")
    return float(eig_sym(d.a_block).values[0])
