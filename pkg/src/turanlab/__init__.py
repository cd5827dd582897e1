"""Exact desk-scale laboratory for generalized Turan numbers ex(n, T, H).

Builds the extremal constructions, counts motif copies exactly, evaluates the
closed forms and bounds in exact rational arithmetic, and verifies the exact
statements by brute-force search over all small labelled graphs.
"""

from .constructions import (
    FormulaResult,
    build_gnka,
    build_hnk,
    build_srab,
    evaluate_formula,
    gnka_count,
    leading_coeff,
    srab_count,
)
from .freeness import Forbidden, circumference, is_free, longest_path_edges
from .graphs import Graph, from_edges, induced_subgraph, parse_graph6, relabel, to_graph6
from .patterns import (
    Pattern,
    automorphism_order,
    count_copies,
    count_paths,
    independence_number,
    make_clique,
    make_cycle,
    make_matching_structure,
    make_path,
    make_star,
)
from .search import ExtremalRecord, SuiteReport, brute_force_ex, stream_ex, verify_suite
from .spectral import check_spectral_path_chain, nikiforov_bound, spectral_radius, walk_count

__all__ = [
    "ExtremalRecord",
    "Forbidden",
    "FormulaResult",
    "Graph",
    "Pattern",
    "SuiteReport",
    "automorphism_order",
    "brute_force_ex",
    "build_gnka",
    "build_hnk",
    "build_srab",
    "check_spectral_path_chain",
    "circumference",
    "count_copies",
    "count_paths",
    "evaluate_formula",
    "from_edges",
    "gnka_count",
    "independence_number",
    "induced_subgraph",
    "is_free",
    "leading_coeff",
    "longest_path_edges",
    "make_clique",
    "make_cycle",
    "make_matching_structure",
    "make_path",
    "make_star",
    "nikiforov_bound",
    "parse_graph6",
    "relabel",
    "spectral_radius",
    "srab_count",
    "stream_ex",
    "to_graph6",
    "verify_suite",
    "walk_count",
]
