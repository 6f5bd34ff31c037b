import numpy as np

from src.config import settings
from src.core.exceptions import (
    ConvergenceFailure,
    InvalidInputError,
    NonDiagonalResidue,
    NotGeneric,
    NotInZ1,
    ResidualTooLarge,
    VanishingProduct,
)
from src.linalg import frobenius_norm
from src.models.domain.normal_form import CanonicalPair, Z1NormalForm
from src.models.domain.quiver import DoubleRepPoint, GaugeElement, LLPoint
from src.normal_form.roots import canonical_order, principal_root, principal_roots
from src.normal_form.single import to_canonical_L
from src.quiver import act_gauge_double, diagonal_extraction, in_moment_zero_set, max_moment_residual


def z1_gauge(p: DoubleRepPoint, d: complex) -> GaugeElement:
    """
    The gauge g_i = x_1...x_{i-1} / d^(i-1) of a scalar point.

    :param p: point of Z_1
    :param d: an m-th root of x_1...x_m
    :return: gauge element
    """

    values = [1.0 + 0j]
    for matrix in p.x[:-1]:
        values.append(values[-1] * matrix[0, 0] / d)
    return GaugeElement(shape=p.shape, g=tuple(np.array([[value]]) for value in values))


def z1_normal_form(p: DoubleRepPoint) -> Z1NormalForm:
    """
    Normal form (d, ..., d, e, ..., e) of a scalar point of Z_1 with nonzero cycle product.

    d is the principal m-th root of x_1...x_m and e = x_1·y_1 / d; the
    moment map equations make every x_i·y_i equal, so the gauge above lands
    exactly there. The landing is verified before returning.

    :param p: point of Z_1
    :return: (d, e)
    """

    if p.shape.n != 1:
        raise InvalidInputError(f"Z_1 normal form needs n = 1, got n = {p.shape.n}.")

    if not in_moment_zero_set(p):
        raise NotInZ1(f"Moment residual {max_moment_residual(p):.3e} exceeds tolerance.")

    entries = [matrix[0, 0] for matrix in p.x]
    product = complex(np.prod(entries))
    scale = max(1.0, max(abs(entry) for entry in entries) ** p.shape.m)
    if abs(product) <= settings.tolerances.generic * scale:
        raise VanishingProduct(f"x_1...x_m = {product:.3e} vanishes to tolerance.")

    d = principal_root(product, p.shape.m)
    e = complex(p.x[0][0, 0] * p.y[0][0, 0] / d)

    gauged = act_gauge_double(z1_gauge(p, d), p)
    deviation = max(
        max(abs(matrix[0, 0] - d) for matrix in gauged.x),
        max(abs(matrix[0, 0] - e) for matrix in gauged.y),
    )
    bound = settings.tolerances.witness * max(1.0, abs(d), abs(e))
    if deviation > bound:
        raise ConvergenceFailure(f"Z_1 normal form residual {deviation:.3e} exceeds {bound:.3e}.")

    return Z1NormalForm(d=d, e=e)


def canonicalize_LL(l: LLPoint, m: int) -> CanonicalPair:
    """
    Canonical W_n-representative of a point of L_n x L_n, computed from the group action directly.

    zᵢ moves to the principal root of zᵢᵐ and z'ᵢ by the inverse twist, so
    zᵢ·z'ᵢ is preserved; entries are then put in canonical order.

    :param l: point with nonzero z-coordinates
    :param m: number of vertices
    :return: canonical pair
    """

    if np.any(l.z == 0):
        raise NotGeneric("Canonical pair needs nonzero z-coordinates.")

    powers = l.z ** m
    roots = principal_roots(powers, m)
    partners = l.z * l.zp / roots
    order = canonical_order(powers, roots)
    return CanonicalPair(z=roots[order], zp=partners[order])


def canonicalize_double(p: DoubleRepPoint) -> CanonicalPair:
    """
    Canonical (z, z') of a point on the G_n-saturation of L_n x L_n.

    The x-part is gauged to canonical form; the same gauge must then carry
    every y-component to one diagonal matrix diag(z').

    :param p: point of Z_n with generic x-part
    :return: canonical pair
    """

    if not in_moment_zero_set(p):
        raise ResidualTooLarge(f"Moment residual {max_moment_residual(p):.3e} exceeds tolerance.")

    canonical = to_canonical_L(p.x_part)
    transported = act_gauge_double(canonical.witness, p)
    zp, deviation = diagonal_extraction(transported.y)

    bound = settings.tolerances.diagonal_residue * max(1.0, max(frobenius_norm(matrix) for matrix in transported.y))
    if deviation > bound:
        raise NonDiagonalResidue(f"Transported y-part is {deviation:.3e} away from a common diagonal matrix.")

    return CanonicalPair(z=canonical.z, zp=zp)
