"""Generalized Turán numbers of graphs with bounded matching number.

Bitset graphs, isomorphism and copy counting, matching certificates,
blow-up exponents, isomorph-free extremal search, Zykov symmetrization and
a harness comparing closed-form predictions with exact search.
"""

from __future__ import annotations

from .blowup import (
    JoinPolynomial,
    b_prime_value,
    b_value,
    blowup_family_exponent,
    eval_join_polynomial,
    join_polynomial,
)
from .errors import (
    CapacityError,
    Graph6Error,
    GraphDomainError,
    MalformedCertificateError,
    SearchCapError,
    TuranLabError,
)
from .graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    empty_graph,
    join,
    matching_graph,
    partial_blowup,
    path_graph,
    turan_graph,
)
from .graph6 import emit_graph6, parse_graph6
from .invariants import (
    berge_tutte_certificate,
    chromatic_number,
    deletion_family,
    min_color_class,
    useless_vertices,
    verify_certificate,
)
from .iso import (
    CanonicalForm,
    GraphFamily,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    count_copies,
    count_embeddings,
)
from .matching import matching_number
from .names import parse_graph
from .search import SearchProblem, SearchResult, enumerate_free_graphs, ex, exact_ex
from .symmetrize import is_complete_multipartite, symmetrize_step, symmetrize_to_fixpoint
from .theorems import Prediction, VerificationReport, verify

__version__ = "0.1.0"
