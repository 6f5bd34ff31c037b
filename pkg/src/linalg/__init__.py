from src.linalg.eigen import eigen_diagonalize, eigenvalues, min_pairwise_gap
from src.linalg.matrices import (
    SquareMatrix,
    as_square_matrix,
    condition_estimate,
    diag_matrix,
    frobenius_norm,
    identity,
    mat_det,
    mat_inverse,
    mat_mul,
    trace,
)
from src.linalg.polynomials import UniPoly, charpoly, poly_roots

__all__ = [
    "SquareMatrix",
    "UniPoly",
    "as_square_matrix",
    "charpoly",
    "condition_estimate",
    "diag_matrix",
    "eigen_diagonalize",
    "eigenvalues",
    "frobenius_norm",
    "identity",
    "mat_det",
    "mat_inverse",
    "mat_mul",
    "min_pairwise_gap",
    "poly_roots",
    "trace",
]
