from dataclasses import dataclass

import numpy as np

from src.config import settings
from src.linalg import eigenvalues, frobenius_norm, min_pairwise_gap
from src.models.domain.quiver import RepPoint
from src.quiver.actions import cycle_product


@dataclass(frozen=True, slots=True)
class GenericityReport:
    """
    Verdict of the genericity test together with both margins.

    Margins are relative: the smallest eigenvalue modulus and the smallest
    pairwise gap, each divided by ‖x_m...x_1‖_F.
    """

    generic: bool
    min_modulus: float
    min_gap: float
    tol: float
    eigenvalues: np.ndarray

    @property
    def near_degenerate(self) -> bool:
        return self.generic and min(self.min_modulus, self.min_gap) <= 10.0 * self.tol

    def __bool__(self) -> bool:
        return self.generic


def is_generic(p: RepPoint, tol: float | None = None) -> GenericityReport:
    """
    Whether x_m...x_1 has pairwise distinct nonzero eigenvalues, to a relative tolerance.

    :param p: point of R_n
    :param tol: relative tolerance, defaults to the configured genericity tolerance
    :return: verdict and diagnostics
    """

    tolerance = settings.tolerances.generic if tol is None else tol
    product = cycle_product(p)
    scale = frobenius_norm(product)

    if scale == 0.0:
        zeros = np.zeros(p.shape.n, dtype=np.complex128)
        return GenericityReport(generic=False, min_modulus=0.0, min_gap=0.0 if p.shape.n > 1 else float("inf"),
                                tol=tolerance, eigenvalues=zeros)

    values = eigenvalues(product)
    min_modulus = float(np.min(np.abs(values))) / scale
    min_gap = min_pairwise_gap(values) / scale

    return GenericityReport(
        generic=min_modulus > tolerance and min_gap > tolerance,
        min_modulus=min_modulus,
        min_gap=min_gap,
        tol=tolerance,
        eigenvalues=values,
    )
