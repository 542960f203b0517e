"""Graph construction, neighborhoods, and serialization."""

import pytest
from hypothesis import given

from conftest import graphs
from oldsets.errors import InputError
from oldsets.fixtures import builtin_graph, g11
from oldsets.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    graph_from_edge_list,
    graph_from_json,
    graph_from_text,
    graph_to_edge_list,
    graph_to_json,
    mask_of,
    path_graph,
    vertices_of,
)


def test_p3_construction():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.open_neighborhood(1) == mask_of([0, 2])


def test_k4_construction():
    g = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert all(g.degree(v) == 3 for v in range(4))


def test_duplicate_edges_are_deduplicated():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges() == 1


def test_self_loop_rejected():
    with pytest.raises(InputError):
        build_graph(3, [(1, 1)])


def test_out_of_range_endpoint_rejected():
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])


def test_bad_vertex_query_rejected():
    g = path_graph(3)
    with pytest.raises(InputError):
        g.open_neighborhood(5)


def test_open_neighborhood_examples():
    assert path_graph(3).open_neighborhood(1) == mask_of([0, 2])
    assert complete_graph(4).open_neighborhood(0) == mask_of([1, 2, 3])
    assert cycle_graph(5).open_neighborhood(0) == mask_of([1, 4])


def test_closed_neighborhood_examples():
    assert path_graph(3).closed_neighborhood(1) == mask_of([0, 1, 2])
    assert complete_graph(4).closed_neighborhood(0) == mask_of([0, 1, 2, 3])
    assert cycle_graph(5).closed_neighborhood(2) == mask_of([1, 2, 3])


def test_g11_fixture_loads_and_validates():
    g = g11()
    assert g.n == 11
    assert g.num_edges() == 13
    # the triangles named in the uniqueness argument
    for tri in (("v1", "v2", "v3"), ("v5", "v6", "v7"), ("v9", "v10", "v11")):
        a, b, c = (g.index_of(x) for x in tri)
        assert g.adj[a] >> b & 1 and g.adj[a] >> c & 1 and g.adj[b] >> c & 1


def test_g11_codes_of_known_locating_set():
    g = g11()
    s = mask_of(g.index_of(x) for x in ("v2", "v3", "v6", "v7", "v9", "v10"))
    code = lambda name: g.adj[g.index_of(name)] & s
    assert code("v1") == mask_of([g.index_of("v2"), g.index_of("v3")])
    assert code("v2") == mask_of([g.index_of("v3")])
    assert code("v3") == mask_of([g.index_of("v2")])
    assert code("v4") == mask_of([g.index_of("v3"), g.index_of("v7")])
    assert code("v8") == mask_of([g.index_of("v7"), g.index_of("v9")])


def test_builtin_graph_names():
    assert builtin_graph("c5").n == 5
    with pytest.raises(InputError):
        builtin_graph("nope")


@given(graphs())
def test_open_neighborhood_never_contains_self(g):
    for v in range(g.n):
        assert not g.open_neighborhood(v) >> v & 1
        assert g.closed_neighborhood(v) == g.open_neighborhood(v) | 1 << v


@given(graphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges()


@given(graphs())
def test_json_round_trip(g):
    back = graph_from_json(graph_to_json(g))
    assert back.n == g.n and back.adj == g.adj and back.labels == g.labels


@given(graphs())
def test_edge_list_round_trip(g):
    back = graph_from_edge_list(graph_to_edge_list(g))
    assert back.n == g.n and back.adj == g.adj


def test_text_sniffing():
    g = cycle_graph(4)
    assert graph_from_text(graph_to_json(g)).adj == g.adj
    assert graph_from_text(graph_to_edge_list(g)).adj == g.adj


def test_edge_list_errors():
    with pytest.raises(InputError):
        graph_from_edge_list("")
    with pytest.raises(InputError):
        graph_from_edge_list("3\n0 1\n")
    with pytest.raises(InputError):
        graph_from_edge_list("3 2\n0 1\n")


def test_labels_resolution():
    g = g11()
    assert g.index_of("v1") == 0
    assert g.index_of("3") == 3
    with pytest.raises(InputError):
        g.index_of("w9")


def test_label_validation():
    with pytest.raises(InputError):
        build_graph(2, [], labels=["a"])
    with pytest.raises(InputError):
        build_graph(2, [], labels=["a", "a"])


def test_vertices_of_mask_round_trip():
    assert vertices_of(mask_of([5, 1, 3])) == [1, 3, 5]
