"""Command-line entry point: ``turanlab <subcommand> [options]``.

Exit codes: 0 on success, 1 on an in-regime verification mismatch, 2 on
usage errors (bad flags, unparsable graphs, search caps).
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import os
import random
import sys
from typing import Callable, Sequence

from . import theorems
from .blowup import b_prime_value, b_value, eval_join_polynomial, join_polynomial
from .errors import TuranLabError
from .graph import Graph, add_isolated, empty_graph, join, mask_of, members, partial_blowup
from .graph6 import emit_graph6
from .invariants import (
    BergeTutteCertificate,
    berge_tutte_certificate,
    chromatic_number,
    clique_number,
    deletion_family,
    independence_number,
    min_color_class,
    useless_vertices,
    verify_certificate,
)
from .iso import automorphism_count, canonical_form, count_copies, count_embeddings, is_family_free
from .matching import matching_number
from .names import parse_graph, parse_graph_list, parse_int_range
from .search import ex
from .symmetrize import is_complete_multipartite, symmetrize_to_fixpoint


class UsageError(Exception):
    pass


def _graph_arg(text: str) -> Graph:
    try:
        return parse_graph(text)
    except (ValueError, OSError) as exc:
        raise argparse.ArgumentTypeError(f"cannot read graph {text!r}: {exc}") from exc


def _graph_list_arg(text: str) -> list[Graph]:
    try:
        return parse_graph_list(text)
    except (ValueError, OSError) as exc:
        raise argparse.ArgumentTypeError(f"cannot read graph list {text!r}: {exc}") from exc


def _range_arg(text: str) -> list[int]:
    try:
        return parse_int_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _g6(g: Graph) -> str:
    return emit_graph6(g)


# --------------------------------------------------------------------------
# subcommands; each returns (document or list of JSON lines, exit code)
# --------------------------------------------------------------------------


def cmd_construct(args) -> tuple[object, int]:
    g = args.graph
    if args.blowup is not None:
        g = partial_blowup(g, mask_of(args.blowup), args.m)
    if args.join_empty:
        g = join(g, empty_graph(args.join_empty))
    if args.isolated:
        g = add_isolated(g, args.isolated)
    return {"graph6": _g6(g), "n": g.n, "edges": g.edge_count(), "canonical": canonical_form(g).graph6}, 0


def cmd_count(args) -> tuple[object, int]:
    h, g = args.h, args.g
    return {
        "copies": count_copies(h, g),
        "embeddings": count_embeddings(h, g),
        "automorphisms": automorphism_count(h),
    }, 0


INVARIANTS: dict[str, Callable[[Graph], object]] = {
    "n": lambda g: g.n,
    "edges": lambda g: g.edge_count(),
    "nu": matching_number,
    "omega": clique_number,
    "alpha": independence_number,
    "chi": chromatic_number,
    "aut": automorphism_count,
    "p": lambda g: min_color_class(g) if chromatic_number(g) <= 2 else None,
    "complete_multipartite": lambda g: is_complete_multipartite(g)[0],
}


def cmd_invariant(args) -> tuple[object, int]:
    names = args.which.split(",") if args.which else list(INVARIANTS)
    unknown = [x for x in names if x not in INVARIANTS]
    if unknown:
        raise UsageError(f"unknown invariant(s) {', '.join(unknown)}; choose from {', '.join(INVARIANTS)}")
    return {name: INVARIANTS[name](args.g) for name in names}, 0


def cmd_bt_certificate(args) -> tuple[object, int]:
    g = args.g
    if args.check:
        try:
            with open(args.check) as fh:
                cert = BergeTutteCertificate.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read certificate {args.check}: {exc}") from exc
    else:
        cert = berge_tutte_certificate(g)
    out = cert.to_json()
    if args.s is not None:
        out["s"] = args.s
        out["certifies_free"] = verify_certificate(g, cert, args.s)
    return out, 0


def cmd_family(args) -> tuple[object, int]:
    fam = deletion_family(args.f, star_only=args.star)
    out: dict = {"source": _g6(args.f), "star_only": args.star, "members": [_g6(m) for m in fam.members]}
    out["min_chromatic"] = min(chromatic_number(m) for m in fam.members)
    if args.useless_in is not None:
        out["useless_vertices"] = members(useless_vertices(args.useless_in, fam.members))
    return out, 0


def cmd_b(args) -> tuple[object, int]:
    return b_value(args.h, args.s).to_json(), 0


def cmd_bprime(args) -> tuple[object, int]:
    return b_prime_value(args.h, args.f, args.s).to_json(), 0


def cmd_joinpoly(args) -> tuple[object, int]:
    poly = join_polynomial(args.h, args.g0)
    out = poly.to_json()
    if args.t is not None:
        out["values"] = {str(t): eval_join_polynomial(poly, t) for t in args.t}
    return out, 0


def cmd_ex(args) -> tuple[object, int]:
    res = ex(
        args.n,
        args.count,
        args.forbid,
        workers=args.threads,
        maximal_only=not args.all_graphs,
        max_extremal=args.max_extremal,
        override_cap=args.override_cap,
    )
    return res.to_json(timing=args.timing), 0


def _random_free_graph(n: int, forbidden: Sequence[Graph], rng: random.Random) -> Graph:
    g = empty_graph(n)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    for a, b in pairs:
        cand = g.with_edge(a, b)
        if is_family_free(forbidden, cand):
            g = cand
    return g


def cmd_symmetrize(args) -> tuple[object, int]:
    if args.g is None:
        if args.random is None:
            raise UsageError("give --g or --random")
        g = _random_free_graph(args.random, args.forbid, random.Random(args.seed))
    else:
        g = args.g
    core = mask_of(args.core) if args.core else None
    trace = symmetrize_to_fixpoint(g, args.count, args.forbid, budget=args.budget, core=core)
    lines: list[dict] = [{"start": _g6(g)}]
    lines.extend({"step": i, **st.to_json()} for i, st in enumerate(trace.steps))
    final = trace.final
    ok, parts = is_complete_multipartite(final)
    lines.append({
        "final": _g6(final),
        "reached_fixpoint": trace.reached_fixpoint,
        "complete_multipartite": ok,
        "parts": [members(p) for p in parts],
    })
    return lines, 0


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

_DEFAULTS: dict[str, dict] = {
    "erdos-gallai": {"s": [1, 2], "n": "2s+1..8"},
    "alon-frankl": {"r": [2, 3], "s": [1, 2], "n": "2s+1..8"},
    "klikks": {"k": [3], "r": [3], "s": [2], "n": [5, 6, 7, 8, 9]},
    "matc": {"H": ["P3", "K3"], "s": [2], "n": [5, 6, 7, 8]},
    "k2": {"F": ["K4"], "s": [2], "n": [5, 6, 7, 8]},
    "kk": {"k": [3], "F": ["K4"], "s": [2], "n": [5, 6, 7, 8]},
    "main": {"H": ["K3"], "F": ["K4"], "s": [2], "n": [5, 6, 7, 8]},
    "multip": {"H": ["K3", "P3"], "r": [3], "s": [2], "n": [6, 7, 8]},
    "usel-growth": {"pairs": [("K2", "K3"), ("K3", "K4")], "n": [4, 5, 6, 7, 8]},
    "usi": {"H": ["K3"], "F": ["K4"], "s": [2], "n": [6, 7, 8]},
    "propp": {"r": [4], "n": [9], "s": [1, 2, 3]},
}

_PARAMS = {
    "erdos-gallai": ("n", "s"),
    "alon-frankl": ("n", "r", "s"),
    "klikks": ("n", "k", "r", "s"),
    "matc": ("n", "H", "s"),
    "k2": ("n", "F", "s"),
    "kk": ("n", "k", "F", "s"),
    "main": ("n", "H", "F", "s"),
    "multip": ("n", "H", "r", "s"),
    "usel-growth": ("n", "H", "F"),
    "usi": ("n", "H", "F", "s"),
}


def build_grid(theorem: str, args) -> list[dict]:
    """Cartesian product of the supplied (or default) parameter values."""
    if theorem not in theorems.THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(theorems.THEOREMS)}")
    defaults = _DEFAULTS[theorem]
    given = {"n": args.n, "s": args.s, "k": args.k, "r": args.r, "H": args.h, "F": args.f}
    if theorem == "propp":
        return [{
            "r": max(given["r"] or defaults["r"]),
            "n": max(given["n"] or defaults["n"]),
            "s_values": tuple(given["s"] or defaults["s"]),
        }]
    names = _PARAMS[theorem]
    values: dict[str, list] = {}
    for name in names:
        if name == "n":
            continue
        if given[name] is not None:
            values[name] = list(given[name])
        elif name in defaults:
            values[name] = [parse_graph(x) if isinstance(x, str) else x for x in defaults[name]]
    pairs = None
    if theorem == "usel-growth" and given["H"] is None and given["F"] is None:
        pairs = [(parse_graph(a), parse_graph(b)) for a, b in defaults["pairs"]]
    elif theorem == "usel-growth" and (given["H"] is None or given["F"] is None):
        raise UsageError("usel-growth needs both --h and --f (or neither)")
    grid = []
    keys = [k for k in names if k != "n" and k in values]
    combos = [dict(zip(keys, combo)) for combo in itertools.product(*(values[k] for k in keys))]
    if pairs is not None:
        combos = [{"H": h, "F": f} for h, f in pairs]
    for combo in combos:
        if given["n"] is not None:
            n_values = given["n"]
        elif defaults.get("n") == "2s+1..8":
            n_values = list(range(2 * combo["s"] + 1, 9))
        else:
            n_values = defaults.get("n", [])
        if not n_values:
            grid.append(combo)
        for n in n_values:
            grid.append({"n": n, **combo})
    ordered = []
    for pt in grid:
        ordered.append({k: pt[k] for k in names if k in pt})
    return ordered


def _jsonable(value):
    if isinstance(value, Graph):
        return _g6(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def cmd_verify(args) -> tuple[object, int]:
    grid = build_grid(args.theorem, args)
    report = theorems.verify(args.theorem, grid, workers=args.threads)
    code = 0 if report.ok else 1
    for line in theorems.mismatch_lines(report):
        args.stderr.write(line + "\n")
    if args.output == "table":
        return report.to_table(), code
    return _jsonable(report.to_json()), code


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1, help="worker processes for searches")
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized inputs only")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="turanlab",
        description="Generalized Turán numbers under a forbidden matching: counting, search, predictions.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    def add(name: str, help_text: str, func) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text, parents=[common])
        p.set_defaults(func=func)
        return p

    graph_help = "graph6 string, @file, or shorthand K5, Kbar3, M3, P4, C5, T(5,3), Kmp(2,2,1)"

    p = add("construct", "Build a graph: named shorthand, partial (m,U)-blowup, join with an independent set, isolated vertices.", cmd_construct)
    p.add_argument("--graph", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--blowup", type=_range_arg, help="blown-up vertex set U, e.g. 0,2")
    p.add_argument("--m", type=_positive, default=2, help="blow-up factor")
    p.add_argument("--join-empty", type=_nonneg, default=0, help="join with an independent set of this order")
    p.add_argument("--isolated", type=_nonneg, default=0, help="add this many isolated vertices")

    p = add("count", "Number of copies N(H, G) of H in G, with embeddings and |Aut(H)|.", cmd_count)
    p.add_argument("--h", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--g", type=_graph_arg, required=True, help=graph_help)

    p = add("invariant", "Graph invariants: matching number nu, clique number, independence number alpha, chromatic number, p(F).", cmd_invariant)
    p.add_argument("--g", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--which", help=f"comma list from {','.join(INVARIANTS)} (default all)")

    p = add("bt-certificate", "Berge-Tutte certificate (cut B and odd components) witnessing the matching number.", cmd_bt_certificate)
    p.add_argument("--g", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--s", type=_nonneg, help="also decide M_{s+1}-freeness from the certificate")
    p.add_argument("--check", help="verify a certificate JSON file instead of computing one")

    p = add("family", "Deletion family H(F) (or H*(F) with --star) and useless vertices of a base graph.", cmd_family)
    p.add_argument("--f", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--star", action="store_true", help="delete only maximum independent sets")
    p.add_argument("--useless-in", type=_graph_arg, help="base graph G0 whose useless vertices to report")

    p = add("b", "Blow-up exponent b(H, s): largest U whose partial blow-ups of H avoid M_{s+1}.", cmd_b)
    p.add_argument("--h", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--s", type=_nonneg, required=True)

    p = add("bprime", "Blow-up exponent b'(H, F, s): partial blow-ups avoiding both F and M_{s+1}.", cmd_bprime)
    p.add_argument("--h", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--f", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--s", type=_nonneg, required=True)

    p = add("joinpoly", "Join polynomial t -> N(H, G0 + independent t-set) in the binomial basis.", cmd_joinpoly)
    p.add_argument("--h", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--g0", type=_graph_arg, required=True, help=graph_help)
    p.add_argument("--t", type=_range_arg, help="evaluate at these t, e.g. 0..5")

    p = add("ex", "Exact generalized Turán number ex(n, H, F) with extremal graphs, by isomorph-free search.", cmd_ex)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--count", type=_graph_list_arg, required=True, help="counted graph(s), comma separated")
    p.add_argument("--forbid", type=_graph_list_arg, default=[], help="forbidden graph(s), comma separated")
    p.add_argument("--all-graphs", action="store_true", help="list every extremal graph, not only edge-maximal ones")
    p.add_argument("--max-extremal", type=_positive, default=100)
    p.add_argument("--override-cap", action="store_true", help="allow n above the search cap")
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds (output no longer reproducible)")

    p = add("symmetrize", "Zykov symmetrization to a fixpoint under forbidden graphs; JSON lines, one per step.", cmd_symmetrize)
    p.add_argument("--g", type=_graph_arg, help=graph_help)
    p.add_argument("--random", type=_positive, help="start from a random maximal forbidden-free graph on this many vertices")
    p.add_argument("--count", type=_graph_list_arg, required=True)
    p.add_argument("--forbid", type=_graph_list_arg, default=[])
    p.add_argument("--budget", type=_positive, default=500, help="maximum number of steps")
    p.add_argument("--core", type=_range_arg, help="vertices whose mutual moves are exhausted first")

    p = add("verify", "Compare closed-form predictions with exact search on a parameter grid.", cmd_verify)
    p.add_argument("--theorem", required=True, choices=theorems.THEOREMS)
    p.add_argument("--n", type=_range_arg, help="e.g. 5..9")
    p.add_argument("--s", type=_range_arg)
    p.add_argument("--k", type=_range_arg)
    p.add_argument("--r", type=_range_arg)
    p.add_argument("--h", type=_graph_list_arg, help="counted graph(s) H")
    p.add_argument("--f", type=_graph_list_arg, help="forbidden graph(s) F")
    return parser


def _emit(doc, output: str, stream) -> None:
    if isinstance(doc, str):
        stream.write(doc + "\n")
    elif isinstance(doc, list):
        for line in doc:
            stream.write((json.dumps(line) if output == "json" else _table(line)) + "\n")
    elif output == "json":
        stream.write(json.dumps(doc) + "\n")
    else:
        stream.write(_table(doc) + "\n")


def _table(doc: dict) -> str:
    return "\n".join(f"{k:<20} {json.dumps(v) if isinstance(v, (list, dict)) else v}" for k, v in doc.items())


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    if not args.verbose:
        # mismatches are reported on stderr by the verify command itself
        logging.getLogger("turanlab.theorems").setLevel(logging.ERROR)
    args.stderr = stderr
    try:
        doc, code = args.func(args)
    except (UsageError, TuranLabError, ValueError) as exc:
        stderr.write(f"turanlab {args.command}: error: {exc}\n")
        return 2
    _emit(doc, args.output, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
