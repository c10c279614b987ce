from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from oracles import all_labeled_graphs
from turanlab.errors import (
    Graph6CharacterError,
    Graph6Error,
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
    Graph6TrailingDataError,
)
from turanlab.graph import Graph, complete_graph, empty_graph, petersen_graph
from turanlab.graph6 import emit_graph6, parse_graph6


def test_known_strings():
    assert emit_graph6(complete_graph(5)) == "D~{"
    assert emit_graph6(empty_graph(5)) == "D??"
    assert emit_graph6(complete_graph(2)) == "A_"
    assert emit_graph6(empty_graph(0)) == "?"
    assert emit_graph6(petersen_graph()) == nx.to_graph6_bytes(to_nx(petersen_graph()), header=False).decode().strip()


def test_long_header():
    g = Graph.from_edges(63, [(0, 62)])
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_header_and_whitespace_accepted():
    assert parse_graph6(">>graph6<<D~{\n") == complete_graph(5)


def test_exhaustive_roundtrip_small():
    for n in range(6):
        for g in all_labeled_graphs(n):
            assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_n=12))
def test_matches_networkx_encoder(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert emit_graph6(g) == expected
    assert parse_graph6(expected) == g


@pytest.mark.parametrize(
    "text, error",
    [
        ("", Graph6HeaderError),
        ("D~", Graph6LengthError),
        ("D~{?", Graph6TrailingDataError),
        ("D~ {", Graph6CharacterError),
        ("A\x7f", Graph6CharacterError),
        ("A`", Graph6PaddingError),
        ("~", Graph6HeaderError),
    ],
)
def test_malformed(text, error):
    with pytest.raises(error):
        parse_graph6(text)
    assert issubclass(error, Graph6Error)
