"""Exact spectra of oriented line graphs of regular graphs, and star colorings."""

from .exact_algebra import (
    GaussianInt,
    GaussianMatrix,
    IntMatrix,
    IntPolynomial,
    NotDivisible,
    X,
    charpoly_exact,
    charpoly_faddeev_leverrier,
    integer_roots,
    integrality_check,
    poly_compose,
    poly_exact_divide,
    poly_product_power,
)
from .graph_core import (
    Digraph,
    Graph,
    Graph6Error,
    GraphError,
    HypothesisError,
    SignedGraph,
    adjacency_matrix,
    circulant_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    paw_graph,
    hypercube_graph,
    parse_graph6,
    path_graph,
    petersen_graph,
    validate_regular_connected,
    write_graph6,
)
from .line_operators import (
    ArcIndex,
    LineProjection,
    Orientation,
    line_graph,
    operator_matrix,
    orientation_partition,
    oriented_line_graph,
    signed_line_graph,
    symmetric_digraph,
    underlying_and_line_graph,
)
from .spectral_identities import (
    IDENTITIES,
    RegularSpectrumHandle,
    VerificationReport,
    formula_hermitian,
    formula_line,
    formula_lstar,
    formula_nonbacktracking,
    formula_signed,
    formula_skew,
    spectrum_handle,
    verify_identity,
)
from .star_homomorphism import (
    Coloring,
    StarConverseCounterexample,
    Violation,
    check_lbh,
    check_onh,
    check_star_coloring,
    coloring_to_onih,
    find_lbh,
    find_onh,
    find_star_coloring,
    is_lbh,
    is_onh,
    is_star_coloring,
    complete_target,
    onih_to_coloring,
    star_chromatic_number,
    theorem7_check,
    theorem7_divisor,
)

__version__ = "0.1.0"
