"""Graph model."""
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..errors import DuplicateEdgeError, SelfLoopError, VertexIndexError

Edge = tuple[int, int]


class Graph(BaseModel):
    """Undirected simple graph on vertices ``0..num_vertices-1``.

    Edges are stored canonically (smaller endpoint first, sorted), so two graphs
    with the same structure and labelling compare equal.
    """

    model_config = ConfigDict(frozen=True)

    num_vertices: int = Field(..., ge=0, description="Order N of the graph")
    edges: tuple[Edge, ...] = Field(default=(), description="Canonical edge list")

    @field_validator("edges")
    @classmethod
    def canonicalize_edges(cls, edges: tuple[Edge, ...], info: ValidationInfo) -> tuple[Edge, ...]:
        num_vertices = info.data.get("num_vertices")
        if num_vertices is None:
            return edges

        seen: set[Edge] = set()
        for u, v in edges:
            for endpoint in (u, v):
                if endpoint < 0 or endpoint >= num_vertices:
                    raise VertexIndexError(
                        f"Edge ({u}, {v}) has endpoint {endpoint} outside 0..{num_vertices - 1}"
                    )
            if u == v:
                raise SelfLoopError(f"Self-loop at vertex {u}")
            edge = (u, v) if u < v else (v, u)
            if edge in seen:
                raise DuplicateEdgeError(f"Duplicate edge {edge}")
            seen.add(edge)
        return tuple(sorted(seen))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Neighbour lists in vertex order."""
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


class GraphMeta(BaseModel):
    """Order, size and bipartiteness of a graph; all the spectral step needs to know."""

    model_config = ConfigDict(frozen=True)

    num_vertices: int = Field(..., ge=1, description="N")
    num_edges: int = Field(..., ge=0, description="E")
    bipartite: bool


class TransformParams(BaseModel):
    """Parameters of the iterated construction H^k_n."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(1, ge=1, description="Number of length-5 paths added per edge")
    n: int = Field(1, ge=0, description="Iteration depth")
