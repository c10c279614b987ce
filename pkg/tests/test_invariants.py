from __future__ import annotations

from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from oracles import brute_chromatic, dp_matching_number
from turanlab.errors import GraphDomainError, MalformedCertificateError
from turanlab.graph import (
    Graph,
    add_isolated,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    join,
    mask_of,
    matching_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from turanlab.invariants import (
    BergeTutteCertificate,
    berge_tutte_certificate,
    chromatic_number,
    clique_number,
    components,
    deletion_family,
    family_min_chromatic,
    independence_number,
    independent_sets,
    matching_number,
    maximum_matching,
    min_color_class,
    useless_vertices,
    verify_certificate,
)
from turanlab.iso import GraphFamily, canonical_form


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_matching_number_matches_oracles(g):
    nu = matching_number(g)
    assert nu == dp_matching_number(g)
    assert nu == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    mate = maximum_matching(g)
    pairs = {(v, m) for v, m in enumerate(mate) if m is not None and m >= 0 and v < m}
    assert len(pairs) == nu
    assert all(g.has_edge(a, b) for a, b in pairs)


def test_matching_examples():
    assert matching_number(petersen_graph()) == 5
    assert matching_number(star_graph(6)) == 1
    assert matching_number(complete_graph(5)) == 2
    assert matching_number(empty_graph(5)) == 0


@pytest.mark.parametrize(
    "g, nu",
    [
        (empty_graph(5), 0),
        (star_graph(6), 1),
        (complete_graph(5), 2),
        (petersen_graph(), 5),
        (join(matching_graph(2), empty_graph(2)), 3),
        (add_isolated(complete_graph(5), 3), 2),
    ],
)
def test_certificate_examples(g, nu):
    cert = berge_tutte_certificate(g)
    assert cert.value == nu
    assert verify_certificate(g, cert, nu)
    assert not verify_certificate(g, cert, nu - 1) if nu else True


def test_star_certificate_cuts_centre():
    cert = berge_tutte_certificate(star_graph(6))
    assert cert.cut == 1
    assert len(cert.components) == 6


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_certificate_property(g):
    cert = berge_tutte_certificate(g)
    nu = dp_matching_number(g)
    assert cert.value == nu
    for s in range(4):
        assert verify_certificate(g, cert, s) == (nu <= s)


def test_certificate_json_roundtrip():
    cert = berge_tutte_certificate(petersen_graph())
    assert BergeTutteCertificate.from_json(cert.to_json()) == cert


def test_malformed_certificates():
    g = path_graph(3)
    bad = [
        BergeTutteCertificate(0, (0b111,), 2),  # value disagrees
        BergeTutteCertificate(0b10, (0b1,), 1),  # does not cover vertex 2
        BergeTutteCertificate(0b10, (0b1, 0b101), 1),  # overlap
        BergeTutteCertificate(0, (0b11, 0b100), 1),  # even component
        BergeTutteCertificate(0, (0b101, 0b10), 1),  # disconnected component
        BergeTutteCertificate(0b1000, (0b111,), 2),  # out of range
    ]
    for cert in bad:
        with pytest.raises(MalformedCertificateError):
            verify_certificate(g, cert, 1)
    # components joined by an edge outside the cut
    with pytest.raises(MalformedCertificateError):
        verify_certificate(g, BergeTutteCertificate(0, (0b1, 0b10, 0b100), 0), 1)


def test_components_order():
    g = Graph.from_edges(6, [(4, 5), (0, 3)])
    assert components(g) == [mask_of([0, 3]), 0b10, 0b100, mask_of([4, 5])]
    assert components(g, mask_of([3, 4, 5])) == [0b1000, mask_of([4, 5])]


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_cliques_and_independent_sets(g):
    ng = to_nx(g)
    omega = max((len(c) for c in nx.find_cliques(ng)), default=0)
    assert clique_number(g) == omega
    sets = list(independent_sets(g))
    assert len(sets) == len(set(sets))
    assert 0 in sets
    for i in sets:
        assert all(not (i >> a & 1 and i >> b & 1) for a, b in g.edges())
    assert independence_number(g) == max(i.bit_count() for i in sets)


@settings(max_examples=80)
@given(graphs(max_n=7))
def test_chromatic_matches_brute(g):
    assert chromatic_number(g) == brute_chromatic(g)


def test_chromatic_examples():
    assert chromatic_number(petersen_graph()) == 3
    assert chromatic_number(cycle_graph(7)) == 3
    assert chromatic_number(complete_multipartite([2, 2, 2, 2])) == 4


def _brute_p(f: Graph) -> int:
    best = f.n
    for col in product((0, 1), repeat=f.n):
        if all(col[a] != col[b] for a, b in f.edges()):
            ones = sum(col)
            best = min(best, ones, f.n - ones)
    return best


@settings(max_examples=80)
@given(graphs(min_n=1, max_n=8))
def test_min_color_class_matches_brute(g):
    if chromatic_number(g) > 2:
        with pytest.raises(GraphDomainError):
            min_color_class(g)
    else:
        assert min_color_class(g) == _brute_p(g)
        if g.edge_count():
            assert min_color_class(g) >= 1


def test_min_color_class_examples():
    assert min_color_class(complete_multipartite([2, 3])) == 2
    assert min_color_class(matching_graph(2)) == 2
    assert min_color_class(star_graph(4)) == 1
    assert min_color_class(empty_graph(3)) == 0


def test_deletion_family_examples():
    fam = deletion_family(path_graph(3))
    assert fam.members == GraphFamily([empty_graph(1), empty_graph(2), complete_graph(2)])
    star = deletion_family(path_graph(3), star_only=True)
    assert star.members == GraphFamily([empty_graph(1)])
    assert deletion_family(complete_graph(4)).members == GraphFamily([complete_graph(3)])
    assert family_min_chromatic(deletion_family(complete_graph(5))) == 4
    with_f = deletion_family(complete_graph(3), include_empty=True)
    assert canonical_form(complete_graph(3)) in with_f.members.forms
    with pytest.raises(GraphDomainError):
        deletion_family(empty_graph(3))


@settings(max_examples=60)
@given(graphs(min_n=2, max_n=7))
def test_deletion_family_chromatic_drop(f):
    if not f.edge_count():
        return
    chi = chromatic_number(f)
    fam = deletion_family(f)
    # removing one colour class lowers the chromatic number by exactly one
    assert family_min_chromatic(fam) == chi - 1
    assert all(m.n < f.n for m in fam.members)


def test_useless_vertices():
    g0 = add_isolated(complete_graph(3), 2)
    assert useless_vertices(g0, [complete_graph(3)]) == mask_of([3, 4])
    assert useless_vertices(star_graph(3), [complete_graph(3)]) == 0b1111
    assert useless_vertices(g0, [complete_graph(2), empty_graph(1)]) == 0
