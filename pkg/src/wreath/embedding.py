import numpy as np

from src.config import settings
from src.core.exceptions import StabilityViolation
from src.linalg import frobenius_norm
from src.models.domain.quiver import GaugeElement, LLPoint, LPoint, QuiverShape
from src.models.domain.wreath import MonomialAction, Representation, WreathElement
from src.quiver import act_gauge, act_gauge_double, diagonal_extraction, embed_L, embed_LL
from src.wreath.group import root_of_unity


def permutation_matrix(sigma: tuple[int, ...]) -> np.ndarray:
    """
    Matrix P with P·e_j = e_{sigma(j)}.

    :param sigma: 0-based images
    :return: n x n permutation matrix
    """

    n = len(sigma)
    matrix = np.zeros((n, n), dtype=np.complex128)
    for j, image in enumerate(sigma):
        matrix[image, j] = 1.0
    return matrix


def to_gauge(w: WreathElement) -> GaugeElement:
    """
    The embedding W_n -> G_n: component k (0-based) is σ·diag(ζ_1^k, ..., ζ_n^k).

    :param w: group element
    :return: gauge element of monomial matrices
    """

    permutation = permutation_matrix(w.sigma)
    components = tuple(
        permutation @ np.diag([root_of_unity(w.m, exponent * k) for exponent in w.a])
        for k in range(w.m)
    )
    return GaugeElement(shape=QuiverShape(m=w.m, n=w.n), g=components)


def _stability_bound(*vectors: np.ndarray) -> float:
    return settings.tolerances.stability * max(1.0, *(float(np.max(np.abs(v))) for v in vectors))


def act_on_L(w: WreathElement, l: LPoint) -> LPoint:
    """
    W_n acting on L_n through conjugation by ``to_gauge(w)``.

    :param w: group element
    :param l: point of L_n
    :return: coordinates of the gauged point, which must again lie in L_n
    """

    gauged = act_gauge(to_gauge(w), embed_L(l, w.m))
    z, deviation = diagonal_extraction(gauged.x)

    bound = _stability_bound(l.z)
    if deviation > bound:
        raise StabilityViolation(f"Gauged x-part deviates from L_n by {deviation:.3e} (bound {bound:.3e}).")

    return LPoint(z=z)


def act_on_LL(w: WreathElement, l: LLPoint) -> LLPoint:
    """
    W_n acting on L_n x L_n through the doubled conjugation by ``to_gauge(w)``.

    :param w: group element
    :param l: point of L_n x L_n
    :return: coordinates of the gauged point
    """

    gauged = act_gauge_double(to_gauge(w), embed_LL(l, w.m))
    z, x_deviation = diagonal_extraction(gauged.x)
    zp, y_deviation = diagonal_extraction(gauged.y)

    bound = _stability_bound(l.z, l.zp)
    if max(x_deviation, y_deviation) > bound:
        raise StabilityViolation(
            f"Gauged point deviates from L_n x L_n by {max(x_deviation, y_deviation):.3e} (bound {bound:.3e})."
        )

    return LLPoint(z=z, zp=zp)


def _basis_image_matrix(w: WreathElement, rep: str) -> np.ndarray:
    n = w.n
    basis = np.eye(n, dtype=np.complex128)
    zeros = np.zeros(n, dtype=np.complex128)

    if rep == Representation.L:
        return np.column_stack([act_on_L(w, LPoint(z=basis[k])).z for k in range(n)])

    columns = []
    for k in range(n):
        image = act_on_LL(w, LLPoint(z=basis[k], zp=zeros))
        columns.append(np.concatenate([image.z, image.zp]))
    for k in range(n):
        image = act_on_LL(w, LLPoint(z=zeros, zp=basis[k]))
        columns.append(np.concatenate([image.z, image.zp]))
    return np.column_stack(columns)


def monomial_action(w: WreathElement, rep: str) -> MonomialAction:
    """
    Read the action of ``w`` on L (n coordinates) or L ⊕ L (2n coordinates) off basis vectors.

    The basis-image matrix must have exactly one nonzero entry per row and column,
    each an m-th root of unity.

    :param w: group element
    :param rep: "L" or "LL"
    :return: substitution rule and matrix
    """

    Representation.validate(rep)
    matrix = _basis_image_matrix(w, rep)
    size = matrix.shape[0]
    tolerance = 1e3 * settings.tolerances.stability

    support = np.abs(matrix) > 0.5
    if not (np.all(support.sum(axis=0) == 1) and np.all(support.sum(axis=1) == 1)):
        raise StabilityViolation(f"Action matrix of {w} is not monomial.")

    source = tuple(int(np.argmax(support[row])) for row in range(size))
    phase = []
    for row, column in enumerate(source):
        value = matrix[row, column]
        exponent = int(round(np.angle(value) * w.m / (2.0 * np.pi))) % w.m
        if abs(value - root_of_unity(w.m, exponent)) > tolerance:
            raise StabilityViolation(f"Entry {value} of the action matrix is not an {w.m}-th root of unity.")
        phase.append(exponent)

    off_support = np.where(support, 0.0, matrix)
    if frobenius_norm(off_support) > tolerance:
        raise StabilityViolation("Action matrix has stray off-support entries.")

    matrix.flags.writeable = False
    return MonomialAction(m=w.m, source=source, phase=tuple(phase), matrix=matrix)
