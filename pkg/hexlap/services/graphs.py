"""Graph construction, generators, structural predicates and edge-list I/O."""
import logging
from collections.abc import Callable, Iterable
from typing import Literal

import networkx as nx

from ..errors import EdgeListFormatError, GeneratorError
from ..models.graph import Graph, GraphMeta

logger = logging.getLogger(__name__)

GraphKind = Literal["cycle", "path", "complete"]

MIN_ORDER: dict[str, int] = {"cycle": 3, "path": 2, "complete": 2}

GENERATORS: dict[str, Callable[[int], nx.Graph]] = {
    "cycle": nx.cycle_graph,
    "path": nx.path_graph,
    "complete": nx.complete_graph,
}


def make_graph(num_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and canonicalize an edge list."""
    return Graph(num_vertices=num_vertices, edges=tuple(tuple(e) for e in edges))


def generate(kind: GraphKind, m: int) -> Graph:
    """Standard cycle C_m, path P_m or complete graph K_m."""
    if kind not in MIN_ORDER:
        raise GeneratorError(f"Unknown graph kind '{kind}'; expected one of {sorted(MIN_ORDER)}")
    if m < MIN_ORDER[kind]:
        raise GeneratorError(f"{kind} needs at least {MIN_ORDER[kind]} vertices, got {m}")
    return from_networkx(GENERATORS[kind](m))


def from_networkx(h: nx.Graph) -> Graph:
    """Canonical ``Graph`` of a networkx graph whose nodes are 0 .. N-1."""
    return make_graph(h.number_of_nodes(), h.edges())


def to_networkx(g: Graph) -> nx.Graph:
    return nx.from_dict_of_lists(dict(enumerate(g.adjacency())))


def degrees(g: Graph) -> list[int]:
    result = [0] * g.num_vertices
    for u, v in g.edges:
        result[u] += 1
        result[v] += 1
    return result


def is_connected(g: Graph) -> bool:
    if g.num_vertices <= 1:
        return True
    return nx.is_connected(to_networkx(g))


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(to_networkx(g))


def graph_meta(g: Graph) -> GraphMeta:
    return GraphMeta(num_vertices=g.num_vertices, num_edges=g.num_edges, bipartite=is_bipartite(g))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: a vertex count line, then ``u v`` lines.

    Lines starting with ``#`` and blank lines are ignored.
    """
    if not text.isascii():
        raise EdgeListFormatError("Edge list must be ASCII")

    num_vertices: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            numbers = [int(p) for p in parts]
        except ValueError:
            raise EdgeListFormatError(f"Line {lineno}: expected integers, got '{line}'")

        if num_vertices is None:
            if len(numbers) != 1 or numbers[0] < 0:
                raise EdgeListFormatError(
                    f"Line {lineno}: first line must be a non-negative vertex count, got '{line}'"
                )
            num_vertices = numbers[0]
            continue

        if len(numbers) != 2:
            raise EdgeListFormatError(f"Line {lineno}: expected 'u v', got '{line}'")
        edges.append((numbers[0], numbers[1]))

    if num_vertices is None:
        raise EdgeListFormatError("Edge list has no vertex count line")

    g = make_graph(num_vertices, edges)
    logger.debug(f"Parsed graph with N={g.num_vertices}, E={g.num_edges}")
    return g


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.num_vertices)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
