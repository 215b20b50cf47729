"""Graph model, generators, predicates and edge-list I/O."""
import networkx as nx
import pytest

from hexlap.errors import (
    DuplicateEdgeError,
    EdgeListFormatError,
    GeneratorError,
    SelfLoopError,
    VertexIndexError,
)
from hexlap.models import Graph
from hexlap.services.graphs import (
    degrees,
    from_networkx,
    generate,
    graph_meta,
    is_bipartite,
    is_connected,
    make_graph,
    parse_edge_list,
    serialize_edge_list,
    to_networkx,
)


def test_edges_are_canonical():
    g = make_graph(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g == make_graph(3, [(0, 1), (2, 1)])
    assert g.num_edges == 2


def test_adjacency_lists():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert g.adjacency() == [[1], [0, 2], [1]]


def test_networkx_views(c6):
    h = to_networkx(c6)
    assert sorted(h.nodes) == list(range(6))
    assert nx.is_isomorphic(h, nx.cycle_graph(6))
    assert from_networkx(h) == c6

    petersen = from_networkx(nx.petersen_graph())
    assert (petersen.num_vertices, petersen.num_edges) == (10, 15)
    assert is_connected(petersen)
    assert not is_bipartite(petersen)


def test_isolated_vertex_kept_in_view():
    g = make_graph(3, [(0, 1)])
    assert to_networkx(g).number_of_nodes() == 3
    assert not is_connected(g)
    assert is_bipartite(g)


@pytest.mark.parametrize(
    "edges, error",
    [
        ([(0, 3)], VertexIndexError),
        ([(-1, 0)], VertexIndexError),
        ([(1, 1)], SelfLoopError),
        ([(0, 1), (1, 0)], DuplicateEdgeError),
    ],
)
def test_invalid_edges_rejected(edges, error):
    with pytest.raises(error):
        make_graph(3, edges)


def test_empty_graph_allowed():
    g = Graph(num_vertices=0)
    assert g.num_edges == 0
    assert is_connected(g)


@pytest.mark.parametrize(
    "kind, m, edges",
    [
        ("cycle", 6, 6),
        ("path", 3, 2),
        ("complete", 4, 6),
        ("complete", 2, 1),
    ],
)
def test_generate_sizes(kind, m, edges):
    g = generate(kind, m)
    assert g.num_vertices == m
    assert g.num_edges == edges
    assert is_connected(g)


@pytest.mark.parametrize("kind, m", [("cycle", 2), ("path", 1), ("complete", 1), ("star", 5)])
def test_generate_rejects_bad_arguments(kind, m):
    with pytest.raises(GeneratorError):
        generate(kind, m)


def test_cycle_degrees(c6):
    assert degrees(c6) == [2] * 6


def test_bipartiteness(c5, c6, p3, k4, k2):
    assert is_bipartite(c6)
    assert is_bipartite(p3)
    assert is_bipartite(k2)
    assert not is_bipartite(c5)
    assert not is_bipartite(k4)


def test_disconnected():
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))


def test_graph_meta(c5):
    meta = graph_meta(c5)
    assert (meta.num_vertices, meta.num_edges, meta.bipartite) == (5, 5, False)


def test_serialize_cycle(c6):
    text = serialize_edge_list(c6)
    lines = text.splitlines()
    assert len(lines) == 7
    assert lines[0] == "6"
    assert text.endswith("\n")


def test_parse_skips_comments_and_blank_lines():
    g = parse_edge_list("# a triangle\n3\n\n0 1\n1 2\n# closing edge\n2 0\n")
    assert g == generate("cycle", 3)


def test_parse_serialize_is_canonical():
    text = "3\n2 1\n1 0\n"
    g = parse_edge_list(text)
    assert serialize_edge_list(g) == "3\n0 1\n1 2\n"
    assert parse_edge_list(serialize_edge_list(g)) == g


@pytest.mark.parametrize(
    "text",
    [
        "", "# only a comment\n", "3 4\n0 1\n", "-1\n",
        "3\n0\n", "3\n0 x\n", "3\n0 1 2\n", "3\n0 1 é\n",
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(EdgeListFormatError):
        parse_edge_list(text)


def test_parse_propagates_edge_errors():
    with pytest.raises(VertexIndexError):
        parse_edge_list("2\n0 2\n")
    with pytest.raises(DuplicateEdgeError):
        parse_edge_list("2\n0 1\n1 0\n")
