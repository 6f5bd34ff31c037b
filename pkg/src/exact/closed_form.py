from fractions import Fraction

import numpy as np

from src.core.exceptions import InvalidInputError
from src.models.domain.wreath import MolienSeries, Representation


def molien_closed_form_L(n: int, m: int, max_degree: int) -> MolienSeries:
    """
    Series of ∏_{k=1..n} 1/(1 - t^(mk)), the Hilbert series of a polynomial ring on e_k(z^m).

    :param n: number of coordinates
    :param m: number of vertices
    :param max_degree: truncation degree
    :return: integer series in exact form
    """

    if n < 1 or m < 1 or max_degree < 0:
        raise InvalidInputError(f"Closed form needs n, m >= 1 and max_degree >= 0, got {n}, {m}, {max_degree}.")

    series = np.zeros(max_degree + 1, dtype=object)
    series[0] = 1
    for k in range(1, n + 1):
        step = m * k
        for degree in range(step, max_degree + 1):
            series[degree] += series[degree - step]

    return MolienSeries(n=n, m=m, rep=Representation.L, coefficients=tuple(Fraction(int(c)) for c in series))
