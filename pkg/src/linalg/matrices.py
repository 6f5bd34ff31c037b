from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from src.config import settings
from src.core.exceptions import DimensionMismatch, InvalidInputError, SingularMatrix

SquareMatrix = npt.NDArray[np.complex128]


class PivotPolicy(str, Enum):
    """
    What the LU factorisation does with a pivot below the singularity threshold.
    """

    RAISE = "raise"
    FLOOR = "floor"
    ZERO = "zero"


@dataclass(frozen=True, slots=True)
class LUFactorization:
    """
    Packed LU factors of P·a = L·U with unit lower-triangular L.
    """

    lu: SquareMatrix
    perm: npt.NDArray[np.int64]
    sign: int
    singular: bool


def as_square_matrix(value: npt.ArrayLike, exact: bool = False) -> np.ndarray:
    """
    Validate and freeze a square matrix.

    Numeric matrices are converted to complex128 and checked for finiteness;
    with ``exact=True`` object arrays of exact ring elements pass through.

    :param value: nested sequence or array
    :param exact: keep object dtype instead of casting to complex
    :return: read-only square array
    """

    array = np.array(value, dtype=object if exact else np.complex128)

    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
        raise InvalidInputError(f"Expected a non-empty square matrix, got shape {array.shape}.")

    if not exact and not np.all(np.isfinite(array)):
        raise InvalidInputError("Matrix entries must be finite.")

    array.flags.writeable = False
    return array


def identity(n: int) -> SquareMatrix:
    matrix = np.eye(n, dtype=np.complex128)
    matrix.flags.writeable = False
    return matrix


def diag_matrix(values: Sequence[complex] | np.ndarray) -> SquareMatrix:
    matrix = np.diag(np.asarray(values, dtype=np.complex128))
    matrix.flags.writeable = False
    return matrix


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def trace(a: np.ndarray):
    """
    Sum the diagonal in index order; works for numeric and object arrays.

    :param a: square array
    :return: trace as a scalar of the array's element type
    """

    total = 0
    for index in range(a.shape[0]):
        total = total + a[index, index]
    return total


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Multiply two square matrices with a fixed summation order.

    The product is accumulated as the rank-one sum over k = 0, 1, ..., n-1 of
    column k of ``a`` times row k of ``b``, so every entry is summed in
    ascending k and results are bit-reproducible. Object arrays of exact
    scalars use the same loop.

    :param a: left factor
    :param b: right factor
    :return: the product a·b
    """

    if a.ndim != 2 or b.ndim != 2 or a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"Cannot multiply shapes {a.shape} and {b.shape}.")

    exact = a.dtype == object or b.dtype == object
    n = a.shape[0]
    product = np.zeros((n, n), dtype=object if exact else np.result_type(a, b, np.complex128))

    for k in range(n):
        product = product + np.outer(a[:, k], b[k, :])

    product.flags.writeable = False
    return product


def lu_factor(
        a: np.ndarray,
        policy: PivotPolicy = PivotPolicy.RAISE,
        floor: float | None = None,
) -> LUFactorization:
    """
    LU factorisation with partial pivoting.

    A pivot whose magnitude is at most ``singular_pivot``·‖a‖_F triggers the
    policy: raise ``SingularMatrix``, replace the pivot by ``floor`` (used by
    inverse iteration), or stop and report the matrix as singular.

    :param a: square numeric matrix
    :param policy: behaviour on a tiny pivot
    :param floor: replacement pivot magnitude for ``PivotPolicy.FLOOR``
    :return: packed factorisation
    """

    lu = np.array(a, dtype=np.complex128)
    n = lu.shape[0]
    perm = np.arange(n)
    sign = 1
    threshold = settings.tolerances.singular_pivot * frobenius_norm(lu)

    for k in range(n):
        pivot_row = k + int(np.argmax(np.abs(lu[k:, k])))

        if pivot_row != k:
            lu[[k, pivot_row]] = lu[[pivot_row, k]]
            perm[[k, pivot_row]] = perm[[pivot_row, k]]
            sign = -sign

        if abs(lu[k, k]) <= threshold:
            if policy == PivotPolicy.RAISE:
                raise SingularMatrix(
                    f"Pivot {abs(lu[k, k]):.3e} at step {k} is below {threshold:.3e}."
                )
            if policy == PivotPolicy.ZERO:
                return LUFactorization(lu=lu, perm=perm, sign=sign, singular=True)
            lu[k, k] = floor if floor else np.finfo(float).eps

        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])

    return LUFactorization(lu=lu, perm=perm, sign=sign, singular=False)


def lu_solve(factorization: LUFactorization, rhs: np.ndarray) -> np.ndarray:
    """
    Solve a·x = rhs from a factorisation; ``rhs`` may be a vector or a matrix.

    :param factorization: output of ``lu_factor``
    :param rhs: right-hand side(s)
    :return: solution with the shape of ``rhs``
    """

    lu = factorization.lu
    n = lu.shape[0]
    solution = np.array(rhs, dtype=np.complex128)[factorization.perm]

    for row in range(1, n):
        solution[row] -= lu[row, :row] @ solution[:row]

    for row in range(n - 1, -1, -1):
        solution[row] = (solution[row] - lu[row, row + 1:] @ solution[row + 1:]) / lu[row, row]

    return solution


def mat_inverse(a: npt.ArrayLike) -> SquareMatrix:
    """
    Invert a matrix by LU with partial pivoting and check the residual.

    :param a: square numeric matrix
    :return: the inverse
    """

    matrix = as_square_matrix(a)
    n = matrix.shape[0]
    factorization = lu_factor(matrix)
    inverse = lu_solve(factorization, np.eye(n, dtype=np.complex128))

    residual = frobenius_norm(mat_mul(matrix, inverse) - np.eye(n))
    bound = settings.tolerances.inverse * n * max(frobenius_norm(matrix), 1.0)
    if residual > bound:
        raise SingularMatrix(f"Inverse residual {residual:.3e} exceeds {bound:.3e}.")

    inverse.flags.writeable = False
    return inverse


def mat_det(a: npt.ArrayLike) -> complex:
    """
    Determinant from the LU factors; singular-to-tolerance matrices give 0.

    :param a: square numeric matrix
    :return: determinant
    """

    factorization = lu_factor(as_square_matrix(a), policy=PivotPolicy.ZERO)
    if factorization.singular:
        return 0j

    return complex(factorization.sign * np.prod(np.diag(factorization.lu)))


def condition_estimate(a: npt.ArrayLike) -> float:
    """
    Frobenius-norm condition number ‖a‖_F·‖a⁻¹‖_F; infinite when singular.

    :param a: square numeric matrix
    :return: condition estimate
    """

    matrix = as_square_matrix(a)
    try:
        inverse = mat_inverse(matrix)
    except SingularMatrix:
        return float("inf")

    return frobenius_norm(matrix) * frobenius_norm(inverse)
