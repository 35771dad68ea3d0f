"""Exact weighted zeta functions of finite digraphs.

The zeta function of a finite digraph (multi-arcs and multi-loops allowed),
weighted by per-arc traversal and backtrack rationals, is computed here in
four ways -- as an exponential of closed-path sums, as an Euler product over
prime cycles, as the edge-matrix determinant expression and as the smaller
vertex-matrix determinant expression -- entirely in exact rational
arithmetic, so that their equality can be checked rather than trusted.
"""

from .algebra import (
    Matrix,
    Polynomial,
    Rational,
    RationalFunction,
    T,
    TruncatedSeries,
    cofactor_determinant,
)
from .digraph import (
    Arc,
    ArcClassification,
    Digraph,
    InversePairing,
    UndirectedGraph,
    adjacency_and_degree,
    canonical_inverse_pairing,
    classify_arcs,
    disjoint_union,
    symmetrize,
)
from .fileformat import (
    FileFormatError,
    ParsedDigraph,
    parse_digraph_text,
    parse_graph_text,
    render_digraph_file,
)
from .paths import (
    ClosedPath,
    EnumerationLimitError,
    PrimeCycle,
    circular_product,
    closed_path_sum_bruteforce,
    count_closed_walks,
    count_reduced_closed_paths,
    enumerate_prime_cycles,
    enumeration_work,
    euler_product_series,
)
from .verify import (
    VerificationCheck,
    ZetaReport,
    compute_zeta_report,
    run_verification,
)
from .zeta import (
    EdgeMatrixFactors,
    IdentityReport,
    WeightScheme,
    arc_correction,
    arc_corrections,
    arc_order,
    check_factorization_identities,
    closed_path_sum,
    closed_path_sums,
    edge_matrix,
    edge_matrix_factors,
    exp_expression_series,
    hashimoto_zeta,
    ihara_zeta,
    inversion_block_determinant,
    preset_weights,
    transition_weight,
    weighted_adjacency_matrix,
    weighted_backtrack_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcClassification",
    "ClosedPath",
    "Digraph",
    "EdgeMatrixFactors",
    "EnumerationLimitError",
    "FileFormatError",
    "IdentityReport",
    "InversePairing",
    "Matrix",
    "ParsedDigraph",
    "Polynomial",
    "PrimeCycle",
    "Rational",
    "RationalFunction",
    "T",
    "TruncatedSeries",
    "UndirectedGraph",
    "VerificationCheck",
    "WeightScheme",
    "ZetaReport",
    "adjacency_and_degree",
    "arc_correction",
    "arc_corrections",
    "arc_order",
    "canonical_inverse_pairing",
    "check_factorization_identities",
    "circular_product",
    "classify_arcs",
    "closed_path_sum",
    "closed_path_sum_bruteforce",
    "closed_path_sums",
    "cofactor_determinant",
    "compute_zeta_report",
    "count_closed_walks",
    "count_reduced_closed_paths",
    "disjoint_union",
    "edge_matrix",
    "edge_matrix_factors",
    "enumerate_prime_cycles",
    "enumeration_work",
    "euler_product_series",
    "exp_expression_series",
    "hashimoto_zeta",
    "ihara_zeta",
    "inversion_block_determinant",
    "parse_digraph_text",
    "parse_graph_text",
    "preset_weights",
    "render_digraph_file",
    "run_verification",
    "symmetrize",
    "transition_weight",
    "weighted_adjacency_matrix",
    "weighted_backtrack_matrix",
]
