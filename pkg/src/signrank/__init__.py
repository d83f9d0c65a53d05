"""Exact-arithmetic toolkit for signings and weightings of graph adjacency
matrices: decide and construct edge signs giving full rank and nowhere-zero
integer weights giving rank deficiency, with {1,2}-factor enumeration,
symbolic determinant polynomials and zero-sum flows as the machinery.
"""

__version__ = "0.1.0"

from .assignments import EdgeAssignment
from .detpoly import (
    DetPolynomial,
    det_poly,
    edge_degree_split,
    evaluate,
    is_single_monomial,
    is_zero_polynomial,
    reduce_squares,
    to_text,
)
from .errors import (
    GraphParseError,
    InvalidAssignmentError,
    PreconditionError,
    ResourceCapError,
    SignRankError,
)
from .exact_linalg import IntMatrix, adjacency_matrix, det, mat_vec, matrix_at_point, permanent, rank
from .factors import (
    Factor,
    count_factors,
    count_nonzero_transversals,
    enumerate_factors,
    has_factor,
    perrank_bruteforce,
    perrank_fast,
)
from .graph_core import (
    Bipartition,
    Graph,
    bipartition,
    components,
    cut_edges,
    encode_graph6,
    is_bipartite,
    parse_edge_list,
    parse_graph6,
)
from .sign_search import (
    SignSearchOutcome,
    find_fullrank_sign,
    max_rank_over_signs,
    min_rank_over_signs,
)
from .weight_search import WeightSearchOutcome, find_singular_weight, verify_weight
from .zero_sum_flow import (
    FlowProblem,
    find_zero_sum_flow,
    flow_exists_nonbipartite_test,
    verify_flow,
)
