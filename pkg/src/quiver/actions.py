from src.config import settings
from src.core.exceptions import InvalidInputError
from src.linalg import SquareMatrix, frobenius_norm, identity, mat_inverse, mat_mul
from src.models.domain.quiver import DoubleRepPoint, GaugeElement, RepPoint


def _check_shapes(g: GaugeElement, shape) -> None:
    if g.shape != shape:
        raise InvalidInputError(f"Gauge shape {g.shape} does not match point shape {shape}.")


def act_gauge(g: GaugeElement, p: RepPoint) -> RepPoint:
    """
    Twisted conjugation x_i -> g_{i+1}⁻¹ x_i g_i with indices mod m.

    :param g: gauge element
    :param p: point of R_n
    :return: gauged point
    """

    _check_shapes(g, p.shape)
    m = p.shape.m
    inverses = [mat_inverse(component) for component in g.g]

    return RepPoint(
        shape=p.shape,
        x=tuple(mat_mul(mat_mul(inverses[(i + 1) % m], p.x[i]), g.g[i]) for i in range(m)),
    )


def act_gauge_double(g: GaugeElement, p: DoubleRepPoint) -> DoubleRepPoint:
    """
    Action on the doubled quiver: x_i -> g_{i+1}⁻¹ x_i g_i and y_i -> g_i⁻¹ y_i g_{i+1}.

    :param g: gauge element
    :param p: point of T*R_n
    :return: gauged point
    """

    _check_shapes(g, p.shape)
    m = p.shape.m
    inverses = [mat_inverse(component) for component in g.g]

    return DoubleRepPoint(
        shape=p.shape,
        x=tuple(mat_mul(mat_mul(inverses[(i + 1) % m], p.x[i]), g.g[i]) for i in range(m)),
        y=tuple(mat_mul(mat_mul(inverses[i], p.y[i]), g.g[(i + 1) % m]) for i in range(m)),
    )


def cycle_product(p: RepPoint) -> SquareMatrix:
    """
    The loop x_m·x_{m-1}·...·x_1 at the first vertex.

    :param p: point of R_n
    :return: n x n product
    """

    product = identity(p.shape.n)
    for matrix in p.x:
        product = mat_mul(matrix, product)
    return product


def moment_residual(p: DoubleRepPoint) -> list[SquareMatrix]:
    """
    Residuals r_i = y_i x_i - x_{i-1} y_{i-1} (indices mod m) of the moment map equations.

    :param p: point of T*R_n
    :return: one n x n residual per vertex
    """

    m = p.shape.m
    return [
        mat_mul(p.y[i], p.x[i]) - mat_mul(p.x[(i - 1) % m], p.y[(i - 1) % m])
        for i in range(m)
    ]


def moment_scale(p: DoubleRepPoint) -> float:
    """
    Size of the quadratic terms entering the residual, at least 1.

    :param p: point of T*R_n
    :return: scale for relative residual tolerances
    """

    x_norm = max(frobenius_norm(matrix) for matrix in p.x)
    y_norm = max(frobenius_norm(matrix) for matrix in p.y)
    return max(1.0, x_norm * y_norm)


def max_moment_residual(p: DoubleRepPoint) -> float:
    return max(frobenius_norm(residual) for residual in moment_residual(p))


def in_moment_zero_set(p: DoubleRepPoint, tol: float | None = None) -> bool:
    """
    Membership in Z_n to tolerance.

    :param p: point of T*R_n
    :param tol: relative tolerance, defaults to the configured moment tolerance
    :return: True when the largest residual is within tol·scale
    """

    tolerance = settings.tolerances.moment if tol is None else tol
    return max_moment_residual(p) <= tolerance * moment_scale(p)

