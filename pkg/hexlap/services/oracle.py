"""Ground truth on explicit graphs: normalized Laplacian, dense eigenvalues, Matrix-Tree counts."""
import logging
from typing import Literal

import numpy as np
import numpy.typing as npt
import scipy.linalg
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from ..config import get_settings
from ..errors import JacobiConvergenceError, NumericalError, TheoryPreconditionError
from ..models.graph import Graph
from ..models.spectrum import Spectrum
from .graphs import degrees, graph_meta, is_connected

logger = logging.getLogger(__name__)

SymMatrix = npt.NDArray[np.float64]


def normalized_laplacian(g: Graph) -> SymMatrix:
    """I - D^{-1/2} A D^{-1/2}."""
    deg = np.array(degrees(g), dtype=float)
    if np.any(deg == 0):
        isolated = int(np.flatnonzero(deg == 0)[0])
        raise TheoryPreconditionError(f"Vertex {isolated} is isolated")

    matrix = np.eye(g.num_vertices)
    if g.num_edges:
        u, v = np.array(g.edges, dtype=int).T
        weights = -1.0 / np.sqrt(deg[u] * deg[v])
        matrix[u, v] = weights
        matrix[v, u] = weights
    return matrix


def _round_robin(n: int) -> list[tuple[npt.NDArray[np.intp], npt.NDArray[np.intp]]]:
    """Tournament schedule: n-1 (or n) rounds of disjoint pairs covering every pair once."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [
            (min(a, b), max(a, b))
            for a, b in ((players[i], players[m - 1 - i]) for i in range(m // 2))
            if a >= 0 and b >= 0
        ]
        rounds.append(
            (
                np.array([p for p, _ in pairs], dtype=np.intp),
                np.array([q for _, q in pairs], dtype=np.intp),
            )
        )
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def _jacobi_eigenvalues(matrix: SymMatrix, tol: float, max_sweeps: int) -> npt.NDArray[np.float64]:
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()

    threshold = tol * np.linalg.norm(a)
    rounds = _round_robin(n)
    for sweep in range(max_sweeps + 1):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        logger.debug(f"Jacobi sweep {sweep}: off-diagonal norm {off:.3e}")
        if off <= threshold:
            return np.sort(np.diag(a))
        if sweep == max_sweeps:
            break

        # Pairs within a round are disjoint, so their rotations commute and apply at once.
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[p, p] - a[q, q]) / (2.0 * apq)
            sign = np.where(theta >= 0.0, 1.0, -1.0)
            t = -1.0 / (theta + sign * np.sqrt(theta * theta + 1.0))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            col_p, col_q = a[:, p], a[:, q]
            a[:, p] = col_p * c - col_q * s
            a[:, q] = col_p * s + col_q * c
            row_p, row_q = a[p, :], a[q, :]
            a[p, :] = c[:, None] * row_p - s[:, None] * row_q
            a[q, :] = s[:, None] * row_p + c[:, None] * row_q
            a[p, q] = 0.0
            a[q, p] = 0.0

    raise JacobiConvergenceError(
        f"Jacobi did not reach off-diagonal norm {threshold:.3e} within {max_sweeps} sweeps"
    )


def eigenvalues_sym(
    m: SymMatrix, method: Literal["jacobi", "lapack"] = "jacobi"
) -> npt.NDArray[np.float64]:
    """All eigenvalues of a symmetric matrix, ascending."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NumericalError(f"Expected a square matrix, got shape {m.shape}")
    if not np.allclose(m, m.T, rtol=0.0, atol=1e-12):
        raise NumericalError("Matrix is not symmetric")

    if method == "lapack":
        return np.sort(scipy.linalg.eigh(m, eigvals_only=True))

    settings = get_settings()
    return _jacobi_eigenvalues(m, settings.JACOBI_TOLERANCE, settings.JACOBI_MAX_SWEEPS)


def spectrum_oracle(g: Graph) -> Spectrum:
    """Normalized Laplacian spectrum of an explicit connected graph."""
    if not is_connected(g):
        raise TheoryPreconditionError("Graph is not connected")
    values = eigenvalues_sym(normalized_laplacian(g))
    logger.info(f"Oracle spectrum computed for N={g.num_vertices}")
    return Spectrum.from_values(values, graph_meta(g), get_settings().MERGE_TOLERANCE)


def spanning_trees_matrix_tree(g: Graph) -> int:
    """Exact spanning-tree count: determinant of a reduced combinatorial Laplacian.

    The determinant is taken over the integers with fraction-free (Bareiss) elimination.
    """
    if not is_connected(g):
        raise TheoryPreconditionError("Graph is not connected; it has no spanning tree")
    size = g.num_vertices - 1
    if size <= 0:
        return 1

    deg = degrees(g)
    rows = [[ZZ(0)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = ZZ(deg[i])
    for u, v in g.edges:
        if u < size and v < size:
            rows[u][v] = ZZ(-1)
            rows[v][u] = ZZ(-1)
    return int(DomainMatrix(rows, (size, size), ZZ).det())
