from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import all_labeled_graphs
from turanlab.errors import GraphDomainError
from turanlab.graph import Graph, complete_graph, complete_multipartite, empty_graph, path_graph, turan_graph
from turanlab.iso import contains_subgraph, count_copies
from turanlab.search import enumerate_free_graphs
from turanlab.symmetrize import (
    best_symmetrization,
    distinct_neighborhoods,
    is_complete_multipartite,
    symmetrize_step,
    symmetrize_to_fixpoint,
)

K3, K4 = complete_graph(3), complete_graph(4)


def test_step_copies_neighbourhood():
    g = Graph.from_edges(4, [(0, 1), (2, 3), (1, 2)])
    h = symmetrize_step(g, 0, 2)
    assert h.adj[0] == g.adj[2]
    assert set(h.edges()) == {(0, 1), (0, 3), (1, 2), (2, 3)}


def test_step_requires_non_adjacent_distinct():
    g = path_graph(3)
    with pytest.raises(GraphDomainError):
        symmetrize_step(g, 0, 1)
    with pytest.raises(GraphDomainError):
        symmetrize_step(g, 1, 1)


def _is_cm_brute(g: Graph) -> bool:
    # non-adjacency must be transitive
    for a in range(g.n):
        for b in range(g.n):
            for c in range(g.n):
                if len({a, b, c}) == 3 and not g.has_edge(a, b) and not g.has_edge(b, c) and g.has_edge(a, c):
                    return False
    return True


@settings(max_examples=150)
@given(graphs(max_n=7))
def test_is_complete_multipartite_matches_definition(g):
    ok, parts = is_complete_multipartite(g)
    assert ok == _is_cm_brute(g)
    if ok:
        assert sum(p.bit_count() for p in parts) == g.n
        assert parts == sorted(parts, key=lambda p: p & -p)


def test_is_complete_multipartite_examples():
    assert is_complete_multipartite(complete_multipartite([3, 2, 1]))[0]
    assert is_complete_multipartite(empty_graph(4)) == (True, [0b1111])
    assert not is_complete_multipartite(path_graph(4))[0]


def test_zykov_properties_exhaustive_small():
    for n in range(2, 6):
        for g in all_labeled_graphs(n):
            if contains_subgraph(K4, g):
                continue
            base = count_copies(K3, g)
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    a, b = symmetrize_step(g, u, v), symmetrize_step(g, v, u)
                    assert not contains_subgraph(K4, a) and not contains_subgraph(K4, b)
                    assert max(count_copies(K3, a), count_copies(K3, b)) >= base
                    cand, direction = best_symmetrization(g, u, v, [K3], [K4])
                    assert direction is not None
                    assert count_copies(K3, cand) >= base


def test_best_symmetrization_tie_prefers_smaller_source():
    g = empty_graph(3)
    cand, direction = best_symmetrization(g, 2, 0, [K3], [K4])
    assert direction == (0, 2)


def test_best_symmetrization_rejects_illegal_moves():
    # either direction between 0 and 2 in the 5-cycle creates a 4-cycle
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    cand, direction = best_symmetrization(g, 0, 2, [complete_graph(2)], [c4])
    assert direction is None and cand == g


def test_fixpoint_is_complete_multipartite_on_small_classes():
    for n in range(1, 7):
        for g in enumerate_free_graphs(n, [K4]):
            trace = symmetrize_to_fixpoint(g, [K3], [K4])
            assert trace.reached_fixpoint
            final = trace.final
            assert not contains_subgraph(K4, final)
            assert count_copies(K3, final) >= count_copies(K3, g)
            counts = [count_copies(K3, g)] + [st.copies_after for st in trace.steps]
            assert counts == sorted(counts)
            assert is_complete_multipartite(final)[0]


def test_trace_steps_replay():
    rng = random.Random(5)
    g = empty_graph(8)
    pairs = [(a, b) for a in range(8) for b in range(a + 1, 8)]
    rng.shuffle(pairs)
    for a, b in pairs:
        if not contains_subgraph(K4, g.with_edge(a, b)):
            g = g.with_edge(a, b)
    trace = symmetrize_to_fixpoint(g, [K3], [K4])
    cur = g
    for st in trace.steps:
        assert st.copies_before == count_copies(K3, cur)
        cur = symmetrize_step(cur, st.source, st.target)
        assert st.copies_after == count_copies(K3, cur)
    assert cur == trace.final


def test_turan_minus_edge_recovers_multipartite():
    g = turan_graph(6, 3).without_edge(0, 2)
    trace = symmetrize_to_fixpoint(g, [K3], [K4])
    assert trace.reached_fixpoint
    assert is_complete_multipartite(trace.final)[0]
    assert count_copies(K3, trace.final) == 8


def test_budget_and_core():
    g = turan_graph(6, 3).without_edge(0, 2)
    trace = symmetrize_to_fixpoint(g, [K3], [K4], budget=1)
    assert len(trace.steps) <= 1
    assert not trace.reached_fixpoint or len(trace.steps) <= 1
    with pytest.raises(GraphDomainError):
        symmetrize_to_fixpoint(g, [K3], [K4], budget=0)
    with pytest.raises(GraphDomainError):
        symmetrize_to_fixpoint(K4, [K3], [K4])
    core = symmetrize_to_fixpoint(g, [K3], [K4], core=0b111)
    assert core.reached_fixpoint and is_complete_multipartite(core.final)[0]


def test_distinct_neighborhoods():
    assert distinct_neighborhoods(complete_multipartite([2, 2])) == 2
    assert distinct_neighborhoods(complete_graph(3)) == 3
