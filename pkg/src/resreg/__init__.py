"""Resistance distance, resistance regularity and resistance spectra of graphs.

Exact quantities are :class:`fractions.Fraction` throughout; eigenvalues are
the only floating point values.
"""

from .checks import analyze, scan, verify_graph, verify_product
from .families import FamilySpec, figure_graph, generate, parse_family
from .formats import FormatError, encode_graph6, parse_edge_list, parse_graph6, read_graph6_file
from .graph import DisconnectedGraphError, Graph, GraphError, cartesian_k2, double_graph, lexicographic_k2
from .linalg import (
    RationalMatrix,
    SingularMatrixError,
    laplacian,
    laplacian_pinv,
    one_inverse_block_zero,
    one_inverse_schur,
)
from .oracle import BudgetExceeded, oracle_resistance
from .resistance import ClassLabel, ResistanceProfile, classify, diag_pinv_test, profile, resistance_matrix
from .spectral import (
    BoundsReport,
    Spectrum,
    bounds_report,
    eigencondition_regularity_test,
    energy_identities,
    q_polynomial_check,
    r_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport", "BudgetExceeded", "ClassLabel", "DisconnectedGraphError", "FamilySpec",
    "FormatError", "Graph", "GraphError", "RationalMatrix", "ResistanceProfile",
    "SingularMatrixError", "Spectrum", "analyze", "bounds_report", "cartesian_k2", "classify",
    "diag_pinv_test", "double_graph", "eigencondition_regularity_test", "encode_graph6",
    "energy_identities", "figure_graph", "generate", "laplacian", "laplacian_pinv",
    "lexicographic_k2", "one_inverse_block_zero", "one_inverse_schur", "oracle_resistance",
    "parse_edge_list", "parse_family", "parse_graph6", "profile", "q_polynomial_check",
    "r_spectrum", "read_graph6_file", "resistance_matrix", "scan", "verify_graph", "verify_product",
]
