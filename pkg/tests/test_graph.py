from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs, to_nx
from turanlab.errors import CapacityError, GraphDomainError
from turanlab.graph import (
    Graph,
    add_isolated,
    complement,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    join,
    mask_of,
    matching_graph,
    members,
    partial_blowup,
    path_graph,
    petersen_graph,
    star_graph,
    turan_graph,
    turan_parts,
)


def test_constructor_sizes():
    assert complete_graph(5).edge_count() == 10
    assert empty_graph(4).edge_count() == 0
    assert matching_graph(3).n == 6 and matching_graph(3).edge_count() == 3
    assert path_graph(4).edge_count() == 3
    assert cycle_graph(5).degrees() == [2] * 5
    assert star_graph(4).degree(0) == 4
    assert petersen_graph().degrees() == [3] * 10


def test_matching_graph_pairs_consecutive_vertices():
    assert list(matching_graph(2).edges()) == [(0, 1), (2, 3)]


def test_turan_parts_and_edges():
    assert turan_parts(7, 3) == [3, 2, 2]
    assert turan_parts(2, 3) == [1, 1]
    assert turan_graph(5, 3).edge_count() == 8
    assert turan_graph(6, 2).edge_count() == 9
    assert turan_graph(0, 3).n == 0


def test_complete_multipartite_blocks():
    g = complete_multipartite([2, 1])
    assert list(g.edges()) == [(0, 2), (1, 2)]
    with pytest.raises(GraphDomainError):
        complete_multipartite([2, 0])


def test_join_and_union():
    g = join(complete_graph(2), empty_graph(3))
    assert g.n == 5 and g.edge_count() == 1 + 6
    u = disjoint_union(complete_graph(3), complete_graph(2))
    assert u.edge_count() == 4 and not u.has_edge(2, 3)
    assert add_isolated(complete_graph(3), 2).isolated_mask() == mask_of([3, 4])


def test_partial_blowup_structure():
    g = partial_blowup(complete_graph(3), mask_of([0]), 3)
    # vertex 0 becomes {0, 1, 2}, vertices 1 and 2 shift to 3 and 4
    assert g.n == 5
    assert not g.has_edge(0, 1) and g.has_edge(0, 3) and g.has_edge(3, 4)
    assert g.edge_count() == 3 * 2 + 1
    assert partial_blowup(complete_graph(3), 0, 5) == complete_graph(3)


def test_partial_blowup_rejects_bad_arguments():
    with pytest.raises(GraphDomainError):
        partial_blowup(complete_graph(3), 1, 0)
    with pytest.raises(GraphDomainError):
        partial_blowup(complete_graph(3), 1 << 3, 2)


def test_domain_errors():
    with pytest.raises(GraphDomainError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphDomainError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphDomainError):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphDomainError):
        cycle_graph(2)


def test_capacity():
    Graph.from_edges(64, [(0, 63)])
    with pytest.raises(CapacityError):
        empty_graph(65)
    with pytest.raises(CapacityError):
        join(empty_graph(40), empty_graph(30))


def test_members_mask_roundtrip():
    assert members(mask_of([5, 0, 3])) == [0, 3, 5]


@given(graphs())
def test_complement_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert g.edge_count() + c.edge_count() == g.n * (g.n - 1) // 2


@given(graphs())
def test_edges_match_networkx(g):
    ng = to_nx(g)
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ng.edges())
    assert g.degrees() == [ng.degree(v) for v in range(g.n)]


@given(graphs(min_n=1))
def test_relabel_preserves_degree_multiset(g):
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


@given(graphs(min_n=1))
def test_induced_subgraph_full_and_empty(g):
    assert induced_subgraph(g, g.vertex_mask) == g
    assert induced_subgraph(g, 0).n == 0


@given(graphs())
def test_with_without_edge(g):
    for u, v in list(g.non_edges())[:3]:
        assert g.with_edge(u, v).without_edge(u, v) == g


@given(graphs())
def test_pickle_roundtrip(g):
    import pickle

    assert pickle.loads(pickle.dumps(g)) == g
