import numpy as np

from src.config import settings
from src.core.exceptions import InvalidInputError, SamplingFailure
from src.exact.generation import elementary_generator
from src.exact.multipoly import MultiPoly, variables_for
from src.invariants import elementary_symmetric
from src.linalg import charpoly, mat_det
from src.models.domain.exact import JacobianReport, VanishingReport, VanishingSample
from src.models.domain.quiver import LPoint
from src.models.domain.wreath import Representation
from src.quiver import embed_L, is_generic
from src.quiver.sampling import complex_gaussian
from src.utils.logger import logger
from src.utils.seeding import derive_seed, make_rng
from src.wreath import root_of_unity

EXACT_MAX_N = 3


def jacobian_matrix(z: np.ndarray, m: int) -> np.ndarray:
    """
    ∂e_k(z_1^m, ..., z_n^m)/∂z_j by the chain rule through w_i = z_i^m.

    Row k (0-based) is e_k of the w's with w_j removed, times m·z_j^(m-1).

    :param z: point of L_n
    :param m: number of vertices
    :return: n x n Jacobian matrix
    """

    n = z.size
    w = z ** m
    matrix = np.empty((n, n), dtype=np.complex128)
    for j in range(n):
        reduced = elementary_symmetric(np.delete(w, j))
        matrix[:, j] = reduced[:n] * m * z[j] ** (m - 1)
    return matrix


def jacobian_formula(z: np.ndarray, m: int) -> complex:
    w = z ** m
    vandermonde = np.prod([w[i] - w[j] for i in range(z.size) for j in range(i + 1, z.size)])
    return complex(np.prod(z) ** (m - 1) * vandermonde)


def _formula_polynomial(n: int, m: int) -> MultiPoly:
    variables = variables_for(n, Representation.L)
    coordinates = [MultiPoly.variable(m, variables, i) for i in range(n)]

    result = MultiPoly.constant(m, variables, 1)
    for coordinate in coordinates:
        result = result * coordinate ** (m - 1)
    for i in range(n):
        for j in range(i + 1, n):
            result = result * (coordinates[i] ** m - coordinates[j] ** m)
    return result


def exact_jacobian(n: int, m: int) -> MultiPoly:
    """
    Jacobian determinant of z -> (e_1(z^m), ..., e_n(z^m)) as an exact polynomial.

    Entries are formal derivatives; the determinant is (-1)^n times the
    constant term of the exact characteristic polynomial.

    :param n: number of coordinates
    :param m: number of vertices
    :return: determinant polynomial
    """

    matrix = np.empty((n, n), dtype=object)
    for k in range(n):
        generator = elementary_generator(n, m, k + 1)
        for j in range(n):
            matrix[k, j] = generator.derivative(j)

    constant = charpoly(matrix, exact=True).coefficients[0]
    return constant if n % 2 == 0 else -constant


def exact_constant(n: int, m: int):
    """
    The constant c with Jacobian = c·formula, or None when the two are not proportional.

    :param n: number of coordinates, at most 3
    :param m: number of vertices
    :return: rational constant or None
    """

    if n > EXACT_MAX_N:
        raise InvalidInputError(f"Exact Jacobian expansion is limited to n <= {EXACT_MAX_N}, got {n}.")

    determinant = exact_jacobian(n, m)
    formula = _formula_polynomial(n, m)
    exponents, coefficient = formula.sorted_terms()[0]
    ratio = determinant.coefficient(exponents) / coefficient

    if ratio.is_zero() or not ratio.is_rational() or determinant != formula * ratio:
        return None
    return ratio.as_rational()


def _sample_nondegenerate(n: int, m: int, seed: int) -> np.ndarray:
    rng = make_rng(seed)
    for attempt in range(settings.limits.sampling_attempts):
        z = complex_gaussian(rng, n)
        scale = max(1.0, float(np.max(np.abs(z)))) ** ((m - 1) * n + m * n * (n - 1) // 2)
        if abs(jacobian_formula(z, m)) > settings.tolerances.generic * scale:
            return z
        logger.debug(f"Resampling degenerate Jacobian point (attempt {attempt + 1})")
    raise SamplingFailure(f"No non-degenerate point after {settings.limits.sampling_attempts} attempts.")


def jacobian_check(n: int, m: int, trials: int, seed: int, exact: bool | None = None) -> JacobianReport:
    """
    Estimate det(Jacobian)/formula on random points and, for small n, compute it exactly.

    :param n: number of coordinates
    :param m: number of vertices
    :param trials: number of random points, at least 2
    :param seed: run seed; trial t uses derive_seed(seed, t)
    :param exact: run the exact expansion, defaults to n <= 3
    :return: mean constant, relative spread and the exact verdict
    """

    if trials < 2:
        raise InvalidInputError(f"Jacobian check needs at least 2 trials, got {trials}.")
    if n < 1 or m < 1:
        raise InvalidInputError(f"Jacobian check needs n, m >= 1, got n={n}, m={m}.")

    ratios = []
    for trial in range(trials):
        z = _sample_nondegenerate(n, m, derive_seed(seed, trial))
        ratios.append(mat_det(jacobian_matrix(z, m)) / jacobian_formula(z, m))

    values = np.array(ratios, dtype=np.complex128)
    mean = complex(np.mean(values))
    spread = float(np.max(np.abs(values - mean)) / abs(mean)) if mean != 0 else float("inf")

    run_exact = n <= EXACT_MAX_N if exact is None else exact
    constant = exact_constant(n, m) if run_exact else None

    return JacobianReport(
        n=n,
        m=m,
        trials=trials,
        constant_estimate=mean,
        relative_spread=spread,
        exact_constant=constant,
        exact_verdict=(constant is not None) if run_exact else None,
    )


def _relative_jacobian(z: np.ndarray, m: int) -> float:
    matrix = jacobian_matrix(z, m)
    hadamard = float(np.prod(np.linalg.norm(matrix, axis=1)))
    if hadamard == 0.0:
        return 0.0
    return abs(mat_det(matrix)) / hadamard


def _vanishing_sample(label: str, z: np.ndarray, m: int) -> VanishingSample:
    relative = _relative_jacobian(z, m)
    return VanishingSample(
        label=label,
        generic=is_generic(embed_L(LPoint(z=z), m)).generic,
        vanishes=relative <= settings.tolerances.generic,
        relative_jacobian=relative,
    )


def jacobian_vanishing_check(n: int, m: int, trials: int, seed: int) -> VanishingReport:
    """
    The Jacobian of L_n -> L_n/W_n vanishes exactly off the generic locus.

    Random points must be generic with nonzero Jacobian; planted points with a
    zero coordinate (m ≥ 2) or with z_2 = ω·z_1 must be non-generic with
    vanishing Jacobian.

    :param n: number of coordinates
    :param m: number of vertices
    :param trials: number of random base points
    :param seed: run seed
    :return: report listing inconsistent samples
    """

    samples = []
    for trial in range(trials):
        z = complex_gaussian(make_rng(derive_seed(seed, trial)), n)
        samples.append(_vanishing_sample(f"random-{trial}", z, m))

        if m >= 2:
            planted = z.copy()
            planted[0] = 0.0
            samples.append(_vanishing_sample(f"zero-coordinate-{trial}", planted, m))

        if n >= 2:
            planted = z.copy()
            planted[1] = root_of_unity(m, 1) * planted[0]
            samples.append(_vanishing_sample(f"colliding-powers-{trial}", planted, m))

    return VanishingReport(n=n, m=m, samples=tuple(samples))
