import numpy as np
import numpy.typing as npt

from src.config import settings
from src.core.exceptions import ClusteredSpectrum, ConvergenceFailure
from src.linalg.matrices import (
    PivotPolicy,
    SquareMatrix,
    as_square_matrix,
    diag_matrix,
    frobenius_norm,
    lu_factor,
    lu_solve,
    mat_inverse,
    mat_mul,
)
from src.linalg.polynomials import charpoly, poly_roots


def min_pairwise_gap(values: np.ndarray) -> float:
    """
    Smallest distance between two entries; infinite for fewer than two.

    :param values: complex vector
    :return: minimum pairwise distance
    """

    if values.size < 2:
        return float("inf")

    distances = np.abs(values[:, None] - values[None, :])
    distances[np.diag_indices(values.size)] = np.inf
    return float(distances.min())


def eigenvalues(a: npt.ArrayLike) -> np.ndarray:
    """
    Eigenvalues as the roots of the characteristic polynomial.

    :param a: square numeric matrix
    :return: eigenvalues sorted by real then imaginary part
    """

    return poly_roots(charpoly(as_square_matrix(a)))


def _normalize_column(vector: np.ndarray) -> np.ndarray:
    vector = vector / np.linalg.norm(vector)
    lead = vector[int(np.argmax(np.abs(vector)))]
    return vector * (np.conj(lead) / abs(lead))


def _inverse_iteration(matrix: SquareMatrix, shift: complex, scale: float) -> np.ndarray:
    """
    Eigenvector for ``shift`` by two inverse-iteration solves.

    A pivot that vanishes because ``shift`` is an exact eigenvalue is
    replaced by machine epsilon times the matrix scale.

    :param matrix: square numeric matrix
    :param shift: approximate eigenvalue
    :param scale: Frobenius norm of ``matrix``
    :return: unit eigenvector whose largest-magnitude entry is real positive
    """

    n = matrix.shape[0]
    shifted = np.array(matrix) - shift * np.eye(n)
    floor = np.finfo(float).eps * max(scale, 1.0)
    factorization = lu_factor(shifted, policy=PivotPolicy.FLOOR, floor=floor)

    index = np.arange(1, n + 1)
    vector = (1.0 + 0.1 * index) + 0.05j * index ** 2
    for _ in range(2):
        vector = _normalize_column(lu_solve(factorization, vector))

    return vector


def eigen_diagonalize(a: npt.ArrayLike) -> tuple[SquareMatrix, np.ndarray]:
    """
    Diagonalize a matrix with pairwise distinct eigenvalues.

    :param a: square numeric matrix
    :return: (v, lambda) with a = v·diag(lambda)·v⁻¹
    """

    matrix = as_square_matrix(a)
    scale = frobenius_norm(matrix)
    values = eigenvalues(matrix)

    gap = min_pairwise_gap(values)
    if gap <= settings.tolerances.eigen_gap * scale:
        raise ClusteredSpectrum(f"Minimum eigenvalue gap {gap:.3e} is below {settings.tolerances.eigen_gap * scale:.3e}.")

    vectors = np.column_stack([_inverse_iteration(matrix, value, scale) for value in values])
    vectors.flags.writeable = False

    reconstruction = mat_mul(mat_mul(vectors, diag_matrix(values)), mat_inverse(vectors))
    error = frobenius_norm(reconstruction - matrix)
    bound = settings.tolerances.eigen_reconstruction * max(scale, np.finfo(float).tiny)
    if error > bound:
        raise ConvergenceFailure(f"Eigen reconstruction error {error:.3e} exceeds {bound:.3e}.")

    values.flags.writeable = False
    return vectors, values
