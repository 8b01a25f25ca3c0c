"""Exact arithmetic over prime fields and the rationals."""

from .field import GF, QQ, Elem, Field, field_for, is_prime
from .jordan import (
    JordanData,
    NonSplitSpectrum,
    ambient_basis,
    eigenvalues,
    in_ambient,
    is_semisimple,
    jordan_chevalley,
    jordan_data,
    jordan_matrix,
    matrix_centralizer_dim,
    multiplicative_jordan,
    random_conjugate,
)
from .matrix import ExactMatrix, char_poly, format_matrix, parse_matrix, symplectic_form
from .poly import Poly, distinct_root_count, poly_gcd, resultant, roots, squarefree_decomposition

__all__ = [
    "GF", "QQ", "Elem", "Field", "field_for", "is_prime",
    "JordanData", "NonSplitSpectrum", "ambient_basis", "eigenvalues", "in_ambient",
    "is_semisimple", "jordan_chevalley", "jordan_data", "jordan_matrix",
    "matrix_centralizer_dim", "multiplicative_jordan", "random_conjugate",
    "ExactMatrix", "char_poly", "format_matrix", "parse_matrix", "symplectic_form",
    "Poly", "distinct_root_count", "poly_gcd", "resultant", "roots", "squarefree_decomposition",
]
