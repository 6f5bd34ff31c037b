import numpy as np

from src.config import settings

_TWO_PI = 2.0 * np.pi


def _argument(value: complex) -> float:
    """
    Argument in [0, 2π).

    Arguments within ``settings.tolerances.branch_cut`` radians below 2π are
    snapped to 0, so values just under the positive real axis take the same
    root as values on it.

    :param value: nonzero complex number
    :return: argument
    """

    theta = float(np.angle(value)) % _TWO_PI
    if _TWO_PI - theta <= settings.tolerances.branch_cut:
        return 0.0
    return theta


def principal_root(value: complex, m: int) -> complex:
    """
    The m-th root of ``value`` whose argument lies in [0, 2π/m).

    :param value: complex number
    :param m: root order
    :return: principal root, 0 for 0
    """

    if value == 0:
        return 0j
    return complex(abs(value) ** (1.0 / m) * np.exp(1j * _argument(value) / m))


def principal_roots(values: np.ndarray, m: int) -> np.ndarray:
    return np.array([principal_root(complex(value), m) for value in values], dtype=np.complex128)


def branch_cut_distance(values: np.ndarray) -> float:
    """
    Smallest angular distance of the values from the positive real axis.

    :param values: nonzero complex numbers
    :return: distance in radians
    """

    thetas = np.angle(np.asarray(values, dtype=np.complex128)) % _TWO_PI
    return float(np.min(np.minimum(thetas, _TWO_PI - thetas)))


def canonical_order(powers: np.ndarray, roots: np.ndarray) -> list[int]:
    """
    Indices sorted by (Re zᵐ, Im zᵐ) and then by (Re z, Im z).

    :param powers: the values zᵢᵐ
    :param roots: the values zᵢ
    :return: permutation listing the new order
    """

    return sorted(
        range(len(roots)),
        key=lambda i: (powers[i].real, powers[i].imag, roots[i].real, roots[i].imag),
    )
