import numpy as np

from src.linalg import diag_matrix, frobenius_norm
from src.models.domain.quiver import DoubleRepPoint, LLPoint, LPoint, QuiverShape, RepPoint


def embed_L(l: LPoint, m: int) -> RepPoint:
    """
    The point (diag(z), ..., diag(z)) of R_n.

    :param l: coordinates z
    :param m: number of vertices
    :return: embedded point
    """

    z = diag_matrix(l.z)
    return RepPoint(shape=QuiverShape(m=m, n=l.n), x=tuple(z for _ in range(m)))


def embed_LL(l: LLPoint, m: int) -> DoubleRepPoint:
    """
    The point with every x-component diag(z) and every y-component diag(z').

    :param l: coordinates (z, z')
    :param m: number of vertices
    :return: embedded point of Z_n
    """

    z = diag_matrix(l.z)
    zp = diag_matrix(l.zp)
    return DoubleRepPoint(
        shape=QuiverShape(m=m, n=l.n),
        x=tuple(z for _ in range(m)),
        y=tuple(zp for _ in range(m)),
    )


def diagonal_extraction(matrices: tuple[np.ndarray, ...]) -> tuple[np.ndarray, float]:
    """
    Read off a common diagonal from matrices that should all equal diag(z).

    :param matrices: the components to inspect
    :return: (diagonal of the first component, largest deviation from diag of it)
    """

    diagonal = np.diag(matrices[0]).copy()
    reference = np.diag(diagonal)
    deviation = max(frobenius_norm(matrix - reference) for matrix in matrices)
    return diagonal, deviation
