from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from src.config import settings
from src.core.exceptions import InvalidInputError, ReconstructionFailure
from src.linalg import charpoly
from src.models.domain.wreath import MolienSeries, Representation, WreathElement
from src.utils.logger import logger
from src.wreath.embedding import monomial_action


def _inverse_det_series(matrix: np.ndarray, max_degree: int) -> np.ndarray:
    """
    Power series of 1/det(I - t·M) up to t^max_degree.

    det(I - t·M) is the reversed characteristic polynomial of M, so its
    coefficients come from the Faddeev-LeVerrier routine.

    :param matrix: action matrix
    :param max_degree: truncation degree
    :return: complex series coefficients
    """

    denominator = np.asarray(charpoly(matrix).coefficients, dtype=np.complex128)[::-1]
    series = np.zeros(max_degree + 1, dtype=np.complex128)
    series[0] = 1.0 / denominator[0]

    for degree in range(1, max_degree + 1):
        span = min(degree, denominator.size - 1)
        series[degree] = -np.dot(denominator[1:span + 1], series[degree - 1::-1][:span]) / denominator[0]

    return series


def _reconstruct(value: complex, order: int) -> Fraction:
    """
    Nearest rational with denominator dividing ``order``, guarded against the numeric value.

    :param value: averaged numeric coefficient
    :param order: group order
    :return: exact coefficient
    """

    exact = Fraction(int(round(value.real * order)), order)
    if abs(complex(exact) - value) >= settings.tolerances.reconstruction_guard:
        raise ReconstructionFailure(f"Coefficient {value} has no rational reconstruction over {order}.")
    return exact


def _group_parameters(elements: Sequence[WreathElement]) -> tuple[int, int]:
    if not elements:
        raise InvalidInputError("Molien series needs a non-empty group.")
    return elements[0].n, elements[0].m


def molien(elements: Sequence[WreathElement], rep: str, max_degree: int) -> MolienSeries:
    """
    Molien series (1/|G|)·Σ_g 1/det(I - t·M_g) of the group on L or L ⊕ L.

    Summation follows the order of ``elements``; each coefficient is then
    reconstructed as a rational with denominator dividing |G|.

    :param elements: the whole group, e.g. from ``wreath_enumerate``
    :param rep: "L" or "LL"
    :param max_degree: truncation degree
    :return: exact series
    """

    Representation.validate(rep)
    n, m = _group_parameters(elements)
    order = len(elements)
    total = np.zeros(max_degree + 1, dtype=np.complex128)

    for element in elements:
        total += _inverse_det_series(monomial_action(element, rep).matrix, max_degree)

    coefficients = tuple(_reconstruct(value, order) for value in total / order)
    logger.debug(f"Molien series of W_{n} (m={m}) on {rep}: {[str(c) for c in coefficients]}")

    return MolienSeries(n=n, m=m, rep=rep, coefficients=coefficients)


def molien_bigraded(elements: Sequence[WreathElement], max_degree: int) -> MolienSeries:
    """
    Bigraded Molien series on L ⊕ L, graded by z-degree and z'-degree.

    The action preserves the two summands, so each term factors as
    1/det(I - t·M_z) times 1/det(I - u·M_z'). Entry [a][b] is kept for
    a + b ≤ max_degree; anti-diagonal sums give the ordinary series.

    :param elements: the whole group
    :param max_degree: truncation of the total degree
    :return: exact series with both gradings
    """

    n, m = _group_parameters(elements)
    order = len(elements)
    total = np.zeros((max_degree + 1, max_degree + 1), dtype=np.complex128)

    for element in elements:
        matrix = monomial_action(element, Representation.LL).matrix
        z_series = _inverse_det_series(matrix[:n, :n], max_degree)
        zp_series = _inverse_det_series(matrix[n:, n:], max_degree)
        total += np.outer(z_series, zp_series)

    averaged = total / order
    bigraded = tuple(
        tuple(_reconstruct(averaged[a, b], order) if a + b <= max_degree else Fraction(0)
              for b in range(max_degree + 1))
        for a in range(max_degree + 1)
    )
    coefficients = tuple(
        sum((bigraded[a][degree - a] for a in range(degree + 1)), Fraction(0))
        for degree in range(max_degree + 1)
    )

    return MolienSeries(n=n, m=m, rep=Representation.LL, coefficients=coefficients, bigraded=bigraded)
