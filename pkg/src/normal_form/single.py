import numpy as np

from src.config import settings
from src.core.exceptions import ConvergenceFailure, InvalidInputError, NotGeneric
from src.linalg import diag_matrix, eigen_diagonalize, frobenius_norm, identity, mat_inverse, mat_mul
from src.models.domain.normal_form import CanonicalL
from src.models.domain.quiver import GaugeElement, LPoint, RepPoint
from src.normal_form.roots import canonical_order, principal_roots
from src.quiver import act_gauge, cycle_product, embed_L, is_generic
from src.utils.logger import logger
from src.wreath import permutation_matrix


def _require_generic(p: RepPoint) -> list[str]:
    report = is_generic(p)
    if not report.generic:
        raise NotGeneric(
            f"Cycle product margins: modulus {report.min_modulus:.3e}, gap {report.min_gap:.3e} "
            f"(tolerance {report.tol:.1e})."
        )

    if report.near_degenerate:
        message = (
            f"Near-degenerate input: genericity margins {report.min_modulus:.3e} / {report.min_gap:.3e} "
            f"are within 10x of tolerance {report.tol:.1e}."
        )
        logger.warning(message)
        return [message]

    return []


def diagonalize_generic(p: RepPoint) -> tuple[GaugeElement, np.ndarray]:
    """
    Gauge a generic point to (I, ..., I, D) with D diagonal.

    With g the eigenvector matrix of x_m...x_1, the gauge
    (g, x_1·g, x_2·x_1·g, ..., x_{m-1}...x_1·g) does it.

    :param p: generic point of R_n
    :return: (gauge element, D)
    """

    _require_generic(p)
    return _diagonalize(p)


def _diagonalize(p: RepPoint) -> tuple[GaugeElement, np.ndarray]:
    vectors, values = eigen_diagonalize(cycle_product(p))

    components = [vectors]
    for matrix in p.x[:-1]:
        components.append(mat_mul(matrix, components[-1]))
    gauge = GaugeElement(shape=p.shape, g=tuple(components))

    diagonal = diag_matrix(values)
    gauged = act_gauge(gauge, p)
    target = [identity(p.shape.n)] * (p.shape.m - 1) + [diagonal]
    residual = max(frobenius_norm(actual - expected) for actual, expected in zip(gauged.x, target))
    bound = settings.tolerances.witness * max(1.0, frobenius_norm(diagonal))
    if residual > bound:
        raise ConvergenceFailure(f"Diagonal form residual {residual:.3e} exceeds {bound:.3e}.")

    return gauge, diagonal


def to_canonical_L(p: RepPoint) -> CanonicalL:
    """
    Canonical representative of a generic orbit inside L_n.

    From (I, ..., I, D) take zᵢ as the principal m-th root of Dᵢᵢ, apply the
    diagonal gauge (I, Z⁻¹, ..., Z^-(m-1)) to reach (Z, ..., Z), and order the
    entries by (Re zᵢᵐ, Im zᵢᵐ, Re zᵢ, Im zᵢ).

    :param p: generic point of R_n
    :return: canonical coordinates and the composed witness gauge
    """

    warnings = _require_generic(p)
    m = p.shape.m
    diagonalizer, diagonal = _diagonalize(p)
    powers = np.diag(diagonal).copy()
    z = principal_roots(powers, m)

    z_inverse = mat_inverse(diag_matrix(z))
    twist_components = [identity(p.shape.n)]
    for _ in range(m - 1):
        twist_components.append(mat_mul(twist_components[-1], z_inverse))
    twist = GaugeElement(shape=p.shape, g=tuple(twist_components))

    order = canonical_order(powers, z)
    permutation = permutation_matrix(tuple(order))
    reorder = GaugeElement(shape=p.shape, g=tuple(permutation for _ in range(m)))

    witness = diagonalizer.compose(twist).compose(reorder)
    canonical_z = z[order]

    gauged = act_gauge(witness, p)
    target = diag_matrix(canonical_z)
    residual = max(frobenius_norm(matrix - target) for matrix in gauged.x)
    bound = settings.tolerances.witness * max(1.0, frobenius_norm(target))
    if residual > bound:
        raise ConvergenceFailure(f"Witness residual {residual:.3e} exceeds {bound:.3e}.")

    canonical_z.flags.writeable = False
    return CanonicalL(z=canonical_z, witness=witness, warnings=tuple(warnings))


def canonical_L_of_point(l: LPoint, m: int) -> CanonicalL:
    return to_canonical_L(embed_L(l, m))


def orbit_equal(p: RepPoint, q: RepPoint) -> bool:
    """
    Whether two generic points share a G_n-orbit, by comparing canonical forms.

    :param p: generic point
    :param q: generic point of the same shape
    :return: True when canonical coordinates agree within the orbit tolerance
    """

    if p.shape != q.shape:
        return False

    first = to_canonical_L(p).z
    second = to_canonical_L(q).z
    scale = max(1.0, float(np.max(np.abs(first))), float(np.max(np.abs(second))))
    return float(np.max(np.abs(first - second))) <= settings.tolerances.orbit * scale


def _scalar_product(p: RepPoint) -> complex:
    if p.shape.n != 1:
        raise InvalidInputError(f"Scalar orbit test needs n = 1, got n = {p.shape.n}.")
    return complex(cycle_product(p)[0, 0])


def r1_orbit_equal(p: RepPoint, q: RepPoint) -> bool:
    """
    The n = 1 criterion: generic scalar points share a G_1-orbit iff x_1...x_m agree.

    :param p: point of R_1
    :param q: point of R_1
    :return: True when the cycle products agree within the orbit tolerance
    """

    if p.shape != q.shape:
        return False

    first, second = _scalar_product(p), _scalar_product(q)
    if first == 0 or second == 0:
        raise NotGeneric("Scalar cycle product vanishes.")
    scale = max(1.0, abs(first), abs(second))
    return abs(first - second) <= settings.tolerances.orbit * scale


def r1_orbit_witness(p: RepPoint, q: RepPoint) -> GaugeElement:
    """
    Gauge h with act_gauge(h, p) = q for scalar points with equal cycle products.

    h_1 = 1 and h_{i+1} = x_i·h_i / x'_i.

    :param p: source point of R_1
    :param q: target point of R_1
    :return: witness gauge
    """

    if not r1_orbit_equal(p, q):
        raise InvalidInputError("Points lie in different G_1-orbits.")

    values = [1.0 + 0j]
    for source, target in zip(p.x[:-1], q.x[:-1]):
        values.append(source[0, 0] * values[-1] / target[0, 0])
    return GaugeElement(shape=p.shape, g=tuple(np.array([[value]]) for value in values))
