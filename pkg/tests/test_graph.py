import pytest
from hypothesis import given

from romank.graph import (DuplicateEdgeError, Graph, HeaderError, SelfLoopError,
                          VertexRangeError, attach_pendants, complete,
                          complete_bipartite, cycle, detect_complete_bipartite,
                          disjoint_union, empty, fan, is_bipartition,
                          is_spanning_subgraph, join, parse_graph, path,
                          serialize_graph)

from .conftest import graphs


@pytest.mark.parametrize("m,n,edges", [(1, 1, 1), (2, 3, 6), (3, 9, 27)])
def test_complete_bipartite_sizes(m, n, edges):
    g, lab = complete_bipartite(m, n)
    assert g.n == m + n and g.num_edges() == edges
    assert lab.side_a == tuple(range(m))
    assert is_bipartition(g, lab)


def test_kmn_sides_independent():
    g, lab = complete_bipartite(3, 9)
    for side in (lab.side_a, lab.side_b):
        assert not any(g.has_edge(u, v) for u in side for v in side if u < v)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0)])
def test_complete_bipartite_rejects_empty_side(m, n):
    with pytest.raises(ValueError):
        complete_bipartite(m, n)


def test_basic_families():
    assert complete(4).num_edges() == 6
    assert path(4).sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert empty(3).num_edges() == 0
    assert cycle(5).num_edges() == 5
    with pytest.raises(ValueError):
        cycle(2)


def test_join_and_fan():
    assert join(empty(2), empty(3)) == complete_bipartite(2, 3)[0]
    k4 = join(path(2), path(2))
    assert k4.num_edges() == 6 and k4.degrees() == [3, 3, 3, 3]
    f = fan(4, 3)
    assert f.n == 7 and f.num_edges() == 3 + 3 * 4


def test_disjoint_union():
    assert disjoint_union([path(3)]) == path(3)
    two = disjoint_union([complete(3), complete(3)])
    assert (two.n, two.num_edges(), two.num_components()) == (6, 6, 2)
    assert disjoint_union([complete(2)] * 4).num_components() == 4


def test_attach_pendants():
    g, lab = complete_bipartite(3, 9)
    gad = attach_pendants(g, lab.side_a, 3)
    assert gad.n == 21 and gad.num_edges() == 36
    assert attach_pendants(g, [], 3) == g
    assert attach_pendants(complete(2), [0], 1) == Graph.from_edges(3, [(0, 1), (0, 2)])
    with pytest.raises(VertexRangeError):
        attach_pendants(g, [99], 1)


def test_spanning_subgraph():
    assert is_spanning_subgraph(path(3), complete(3))
    assert not is_spanning_subgraph(complete(3), path(3))
    kmn, _ = complete_bipartite(4, 3)
    assert is_spanning_subgraph(kmn, join(empty(4), path(3)))


def test_parse_examples():
    assert parse_graph("n 2\n0 1\n") == complete(2)
    assert parse_graph("# comment\nn 3\n") == empty(3)
    with pytest.raises(SelfLoopError):
        parse_graph("n 2\n0 0\n")
    with pytest.raises(DuplicateEdgeError):
        parse_graph("n 2\n0 1\n1 0\n")
    with pytest.raises(VertexRangeError):
        parse_graph("n 2\n0 2\n")
    with pytest.raises(HeaderError):
        parse_graph("0 1\n")


def test_serialize_sorted():
    g = Graph.from_edges(3, [(2, 1), (0, 2)])
    assert serialize_graph(g) == "n 3\n0 2\n1 2\n"


def test_detect_complete_bipartite():
    assert detect_complete_bipartite(complete_bipartite(2, 5)[0]) == (2, 5)
    assert detect_complete_bipartite(cycle(4)) == (2, 2)
    assert detect_complete_bipartite(path(4)) is None


@given(graphs(max_vertices=8))
def test_degree_sum_and_roundtrip(g):
    assert sum(g.degrees()) == 2 * g.num_edges()
    assert parse_graph(serialize_graph(g)) == g
    for u in g.vertices:
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
        assert set(g.closed_neighbors(u)) == set(g.neighbors(u)) | {u}


@given(graphs(max_vertices=6))
def test_pendant_counts(g):
    targets = list(range(0, g.n, 2))
    h = attach_pendants(g, targets, 2)
    assert h.n == g.n + 2 * len(targets)
    assert h.num_edges() == g.num_edges() + 2 * len(targets)
