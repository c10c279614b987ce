from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, to_nx
from oracles import all_labeled_graphs, brute_automorphisms, brute_copies, brute_embeddings, brute_isomorphic
from turanlab.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    join,
    matching_graph,
    path_graph,
    petersen_graph,
    star_graph,
    turan_graph,
)
from turanlab.iso import (
    CountCache,
    GraphFamily,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_graph,
    contains_subgraph,
    contains_through_edge,
    count_copies,
    count_copies_family,
    count_embeddings,
    find_embedding,
    is_family_free,
    vertices_in_copies,
)


def test_automorphism_counts():
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(cycle_graph(5)) == 10
    assert automorphism_count(petersen_graph()) == 120
    assert automorphism_count(matching_graph(2)) == 8
    assert automorphism_count(empty_graph(0)) == 1


def test_embedding_and_copy_examples():
    assert count_embeddings(complete_graph(3), complete_graph(4)) == 24
    assert count_embeddings(matching_graph(2), complete_graph(4)) == 24
    assert count_copies(complete_graph(3), turan_graph(5, 3)) == 4
    assert count_copies(complete_graph(3), join(complete_graph(3), empty_graph(3))) == 1 + 3 * 3
    assert count_copies(path_graph(3), join(complete_graph(2), empty_graph(5))) == 35
    assert count_copies(empty_graph(2), empty_graph(4)) == 6
    assert count_copies(complete_graph(5), complete_graph(4)) == 0


def test_class_counts():
    for n, expected in [(3, 4), (4, 11), (5, 34)]:
        forms = {canonical_form(g) for g in all_labeled_graphs(n)}
        assert len(forms) == expected


def test_canonical_form_iff_isomorphic_n4():
    gs = list(all_labeled_graphs(4))
    rng = random.Random(1)
    sample = rng.sample(list(combinations(gs, 2)), 400)
    for a, b in sample:
        assert (canonical_form(a) == canonical_form(b)) == brute_isomorphic(a, b)


def test_canonical_graph_is_isomorphic_representative():
    g = petersen_graph()
    c = canonical_graph(g)
    assert canonical_form(c) == canonical_form(g)
    assert nx.is_isomorphic(to_nx(c), to_nx(g))
    assert canonical_form(g).graph().n == 10


@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(h) == canonical_form(g)
    assert canonical_graph(h) == canonical_graph(g)


@settings(max_examples=60)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(a, b):
    assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_automorphisms_match_networkx(g):
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(g))
    assert automorphism_count(g) == sum(1 for _ in matcher.isomorphisms_iter())


@settings(max_examples=80)
@given(graphs(max_n=4), graphs(max_n=6))
def test_embeddings_match_injection_oracle(h, g):
    assert count_embeddings(h, g) == brute_embeddings(h, g)
    if brute_embeddings(h, g):
        assert contains_subgraph(h, g)
        phi = find_embedding(h, g)
        assert len(set(phi)) == h.n
        assert all(g.has_edge(phi[a], phi[b]) for a, b in h.edges())
    else:
        assert not contains_subgraph(h, g)
        assert find_embedding(h, g) is None


@settings(max_examples=60)
@given(graphs(max_n=4), graphs(max_n=6))
def test_copies_match_oracle(h, g):
    assert count_copies(h, g) == brute_copies(h, g)
    assert automorphism_count(h) == brute_automorphisms(h)


def test_contains_dispatch_cliques_and_matchings():
    assert contains_subgraph(complete_graph(4), complete_graph(5))
    assert not contains_subgraph(complete_graph(4), turan_graph(8, 3))
    assert contains_subgraph(matching_graph(3), cycle_graph(6))
    assert not contains_subgraph(matching_graph(3), star_graph(6))
    assert contains_subgraph(empty_graph(3), empty_graph(3))
    assert not contains_subgraph(empty_graph(4), empty_graph(3))


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=6), graphs(min_n=1, max_n=4))
def test_contains_through_edge(g, h):
    from itertools import permutations

    for u, v in list(g.edges())[:3]:
        expected = any(
            all(g.has_edge(phi[a], phi[b]) for a, b in h.edges())
            and any({phi[a], phi[b]} == {u, v} for a, b in h.edges())
            for phi in permutations(range(g.n), h.n)
        )
        assert contains_through_edge(h, g, u, v) == expected


def test_contains_through_edge_exact():
    g = join(complete_graph(2), empty_graph(2))  # K4 minus the edge 23
    k3 = complete_graph(3)
    assert contains_through_edge(k3, g, 0, 1)
    assert contains_through_edge(k3, g, 0, 2)
    assert not contains_through_edge(complete_graph(4), g, 0, 1)
    assert not contains_through_edge(empty_graph(2), g, 0, 1)


def test_graph_family_dedup_and_order():
    fam = GraphFamily([complete_graph(3), complete_graph(3).relabel([2, 0, 1]), path_graph(3)])
    assert len(fam) == 2
    assert list(fam.forms) == sorted(fam.forms)
    assert complete_graph(3) in fam
    assert fam == GraphFamily([path_graph(3), complete_graph(3)])


def test_family_counts_and_freeness():
    fam = [complete_graph(3), path_graph(3)]
    g = complete_graph(4)
    assert count_copies_family(fam, g) == 4 + 12
    assert not is_family_free(fam, g)
    assert is_family_free([complete_graph(3)], complete_multipartite([3, 3]))


def test_count_cache():
    cache = CountCache()
    g = turan_graph(6, 3)
    assert count_copies(complete_graph(3), g, cache) == 8
    assert count_copies(complete_graph(3), g.relabel([5, 4, 3, 2, 1, 0]), cache) == 8


def test_vertices_in_copies():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4)])  # triangle, edge, isolated
    assert vertices_in_copies(complete_graph(3), g) == 0b111
    assert vertices_in_copies(complete_graph(2), g) == 0b11111
    assert vertices_in_copies(empty_graph(1), g) == 0b111111
    # K3 plus an isolated vertex needs a fourth vertex outside the triangle
    h = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert vertices_in_copies(h, g) == 0b111111


@pytest.mark.parametrize("h", [complete_graph(3), path_graph(3), matching_graph(2), star_graph(3)])
def test_vertices_in_copies_matches_brute(h):
    from itertools import permutations

    for g in [cycle_graph(5), petersen_graph(), turan_graph(6, 3)]:
        covered = 0
        for phi in permutations(range(g.n), h.n):
            if all(g.has_edge(phi[a], phi[b]) for a, b in h.edges()):
                for v in phi:
                    covered |= 1 << v
        assert vertices_in_copies(h, g) == covered
