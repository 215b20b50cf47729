"""The k-hexagonal transformation H^k(G) and its iterates H^k_n(G)."""
import logging
import math
from typing import Optional

from ..config import get_settings
from ..errors import TheoryPreconditionError, VertexBudgetError
from ..models.graph import Graph, TransformParams
from .graphs import degrees, is_connected

logger = logging.getLogger(__name__)

PATH_LENGTH = 5
INTERIOR_VERTICES = PATH_LENGTH - 1


def require_theory_input(g: Graph) -> None:
    """The hexagonal theory needs a connected graph with at least one edge."""
    if g.num_edges == 0:
        raise TheoryPreconditionError("Graph has no edges")
    if not is_connected(g):
        raise TheoryPreconditionError("Graph is not connected")


def size_after(N0: int, E0: int, k: int, n: int) -> tuple[int, int]:
    """Exact order and size of H^k_n(G) from those of G."""
    growth = (5 * k + 1) ** n
    # (5k+1)^n = 1 (mod 5), so the 4/5 factor always lands on an integer
    return N0 + 4 * (growth - 1) * E0 // 5, growth * E0


def hexagonal(g: Graph, k: int) -> Graph:
    """H^k(G): keep every edge {u, v} and add k internally disjoint u-v paths of length 5.

    Original vertices keep their labels; the four interior vertices of path ``l`` on
    the edge of rank ``r`` are ``N + 4k*r + 4*l + (0..3)``, walked from u to v.
    """
    if k < 1:
        raise TheoryPreconditionError(f"k must be at least 1, got {k}")
    require_theory_input(g)

    next_vertex = g.num_vertices
    edges = list(g.edges)
    for u, v in g.edges:
        for _ in range(k):
            path = [u, *range(next_vertex, next_vertex + INTERIOR_VERTICES), v]
            edges.extend(zip(path, path[1:]))
            next_vertex += INTERIOR_VERTICES

    result = Graph(num_vertices=next_vertex, edges=tuple(edges))
    logger.info(
        f"H^{k} of graph (N={g.num_vertices}, E={g.num_edges}) "
        f"has N={result.num_vertices}, E={result.num_edges}"
    )
    return result


def hexagonal_iter(g: Graph, p: TransformParams, vertex_budget: Optional[int] = None) -> Graph:
    """H^k_n(G), refusing up front when the predicted order exceeds the vertex budget."""
    require_theory_input(g)
    budget = vertex_budget if vertex_budget is not None else get_settings().VERTEX_BUDGET
    predicted_vertices, _ = size_after(g.num_vertices, g.num_edges, p.k, p.n)
    if predicted_vertices > budget:
        raise VertexBudgetError(predicted_vertices, budget)

    result = g
    for _ in range(p.n):
        result = hexagonal(result, p.k)
    return result


def degree_log10_product(g: Graph, k: int, n: int) -> float:
    """log10 of the degree product of H^k_n(G), computed without building it.

    Every vertex multiplies its degree by (k+1) per level; the 4k*E_{j-1} vertices
    created at level j start with degree 2.
    """
    require_theory_input(g)
    log_growth = math.log10(k + 1)
    total = sum(math.log10(d) + n * log_growth for d in degrees(g))
    edges = g.num_edges
    for level in range(1, n + 1):
        created = 4 * k * edges
        total += created * (math.log10(2) + (n - level) * log_growth)
        edges *= 5 * k + 1
    return total
