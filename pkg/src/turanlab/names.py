"""Graph arguments: named shorthands, graph6 strings and ``@file`` references.

Grammar::

    K<int> | Kbar<int> | M<int> | P<int> | C<int> | T(<n>,<r>) | Kmp(<p1>,...)

``M<k>`` is the k-edge matching and ``P<k>`` the path on k vertices.
Anything else is decoded as graph6.
"""

from __future__ import annotations

import re
from pathlib import Path

from .graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    matching_graph,
    path_graph,
    turan_graph,
)
from .graph6 import parse_graph6

_SIMPLE = re.compile(r"(Kbar|K|M|P|C)(\d+)")
_TURAN = re.compile(r"T\((\d+),(\d+)\)")
_KMP = re.compile(r"Kmp\((\d+(?:,\d+)*)\)")

_BUILDERS = {
    "K": complete_graph,
    "Kbar": empty_graph,
    "M": matching_graph,
    "P": path_graph,
    "C": cycle_graph,
}


def parse_graph(text: str) -> Graph:
    """One graph from a shorthand, a graph6 string or ``@file`` (first graph)."""
    text = text.strip()
    if text.startswith("@"):
        graphs = read_graph_file(text[1:])
        if len(graphs) != 1:
            raise ValueError(f"{text} holds {len(graphs)} graphs, expected one")
        return graphs[0]
    compact = text.replace(" ", "")
    if m := _SIMPLE.fullmatch(compact):
        return _BUILDERS[m.group(1)](int(m.group(2)))
    if m := _TURAN.fullmatch(compact):
        return turan_graph(int(m.group(1)), int(m.group(2)))
    if m := _KMP.fullmatch(compact):
        return complete_multipartite([int(p) for p in m.group(1).split(",")])
    return parse_graph6(text)


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    out.append("".join(cur))
    return [part for part in (p.strip() for p in out) if part]


def parse_graph_list(text: str) -> list[Graph]:
    graphs: list[Graph] = []
    for item in split_top_level(text):
        if item.startswith("@"):
            graphs.extend(read_graph_file(item[1:]))
        else:
            graphs.append(parse_graph(item))
    return graphs


def read_graph_file(path: str) -> list[Graph]:
    """One graph per non-blank line; ``#`` starts a comment line."""
    lines = Path(path).read_text().splitlines()
    return [parse_graph(line) for line in lines if line.strip() and not line.lstrip().startswith("#")]


def parse_int_range(text: str) -> list[int]:
    """``5``, ``1,2,4`` or ``5..9`` (inclusive); forms may be mixed."""
    values: list[int] = []
    for item in split_top_level(text):
        if ".." in item:
            lo, hi = item.split("..", 1)
            a, b = int(lo), int(hi)
            if b < a:
                raise ValueError(f"empty range {item!r}")
            values.extend(range(a, b + 1))
        else:
            values.append(int(item))
    if not values:
        raise ValueError(f"no integers in {text!r}")
    return values
