from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import numpy.typing as npt
from numpy.polynomial import polynomial as npoly

from src.config import settings
from src.core.exceptions import ConvergenceFailure, InvalidInputError
from src.linalg.matrices import as_square_matrix, mat_mul, trace
from src.utils.logger import logger


@dataclass(frozen=True, slots=True)
class UniPoly:
    """
    Univariate polynomial with degree-ascending coefficients.

    Coefficients are complex for numeric work or an object array of exact
    ring elements when produced from an exact matrix.
    """

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        if self.coefficients.ndim != 1 or self.coefficients.size == 0:
            raise InvalidInputError("Polynomial needs a non-empty coefficient vector.")
        self.coefficients.flags.writeable = False

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[complex] | np.ndarray) -> "UniPoly":
        values = np.array(coefficients, dtype=np.complex128)
        nonzero = np.flatnonzero(values)
        trimmed = values[: nonzero[-1] + 1] if nonzero.size else values[:1]
        return cls(coefficients=trimmed)

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    def __call__(self, point: complex) -> complex:
        return complex(npoly.polyval(point, np.asarray(self.coefficients, dtype=np.complex128)))


def charpoly(a: npt.ArrayLike, exact: bool = False) -> UniPoly:
    """
    Characteristic polynomial det(tI - a) by the Faddeev-LeVerrier recurrence.

    With M_0 = 0 and c_n = 1, each step sets M_k = a·M_{k-1} + c_{n-k+1}·I and
    c_{n-k} = -tr(a·M_k)/k. Only ring operations and division by the integer
    k are used, so the same routine runs on object arrays of exact scalars.

    :param a: square matrix
    :param exact: treat ``a`` as an object array of exact ring elements
    :return: monic polynomial t^n - (tr a)t^(n-1) + ... + (-1)^n det a
    """

    matrix = as_square_matrix(a, exact=exact)
    n = matrix.shape[0]

    if exact:
        eye = np.empty((n, n), dtype=object)
        for row in range(n):
            for col in range(n):
                eye[row, col] = 1 if row == col else 0
        coefficients = np.empty(n + 1, dtype=object)
        current = np.zeros((n, n), dtype=object)
    else:
        eye = np.eye(n, dtype=np.complex128)
        coefficients = np.zeros(n + 1, dtype=np.complex128)
        current = np.zeros((n, n), dtype=np.complex128)

    coefficients[n] = 1
    for k in range(1, n + 1):
        current = mat_mul(matrix, current) + coefficients[n - k + 1] * eye
        traced = trace(mat_mul(matrix, current))
        coefficients[n - k] = -traced * Fraction(1, k) if exact else -traced / k

    return UniPoly(coefficients=coefficients)


def _initial_guesses(coefficients: np.ndarray) -> np.ndarray:
    """
    Points on a slightly perturbed circle whose radius is the geometric mean of the root moduli.

    :param coefficients: ascending coefficients with nonzero constant and leading terms
    :return: starting approximations
    """

    degree = coefficients.size - 1
    radius = (abs(coefficients[0]) / abs(coefficients[-1])) ** (1.0 / degree)
    if not np.isfinite(radius) or radius == 0.0:
        radius = 1.0

    index = np.arange(degree)
    angles = 2.0 * np.pi * index / degree + 0.4
    radii = radius * (1.0 + 0.01 * index / degree)
    return radii * np.exp(1j * angles)


def _aberth(coefficients: np.ndarray, max_iter: int) -> np.ndarray:
    """
    Aberth-Ehrlich simultaneous iteration.

    Each approximation moves by w/(1 - w·S) where w = p/p' is the Newton step
    and S is the sum of 1/(z_k - z_j) over the other approximations.

    :param coefficients: ascending coefficients, nonzero constant term
    :param max_iter: iteration budget
    :return: root approximations
    """

    degree = coefficients.size - 1
    if degree == 1:
        return np.array([-coefficients[0] / coefficients[1]], dtype=np.complex128)

    derivative = npoly.polyder(coefficients)
    roots = _initial_guesses(coefficients)

    for iteration in range(max_iter):
        values = npoly.polyval(roots, coefficients)
        slopes = npoly.polyval(roots, derivative)

        with np.errstate(divide="ignore", invalid="ignore"):
            newton = values / slopes
            differences = roots[:, None] - roots[None, :]
            np.fill_diagonal(differences, 1.0)
            repulsion = 1.0 / differences
            np.fill_diagonal(repulsion, 0.0)
            correction = newton / (1.0 - newton * repulsion.sum(axis=1))

        settled = values == 0
        correction[settled] = 0.0
        if not np.all(np.isfinite(correction)):
            raise ConvergenceFailure(f"Aberth iteration produced non-finite steps at iteration {iteration}.")

        roots = roots - correction

        if np.all(np.abs(correction) <= 4.0 * np.finfo(float).eps * np.maximum(1.0, np.abs(roots))):
            logger.debug(f"Aberth iteration converged after {iteration + 1} steps (degree {degree})")
            break

    return roots


def poly_roots(p: UniPoly, max_iter: int | None = None) -> np.ndarray:
    """
    All roots of a polynomial with multiplicity.

    Exact zero low-order coefficients are split off as roots at 0, the rest
    goes through Aberth-Ehrlich. Every returned root must satisfy
    |p(λ)| ≤ tol·max|c_i|·max(1, |λ|)^deg.

    :param p: polynomial of degree at least 1
    :param max_iter: iteration budget, defaults to the configured limit
    :return: roots sorted by real then imaginary part
    """

    coefficients = np.asarray(p.coefficients, dtype=np.complex128)
    degree = coefficients.size - 1

    if degree < 1 or coefficients[-1] == 0:
        raise InvalidInputError("Root finding needs degree >= 1 and a nonzero leading coefficient.")

    budget = max_iter or settings.limits.root_max_iter
    zero_count = int(np.argmax(coefficients != 0))
    core = coefficients[zero_count:]
    roots = np.concatenate(
        [np.zeros(zero_count, dtype=np.complex128), _aberth(core, budget) if core.size > 1 else []]
    ).astype(np.complex128)

    scale = float(np.max(np.abs(coefficients)))
    residuals = np.abs(npoly.polyval(roots, coefficients))
    bounds = settings.tolerances.root_residual * scale * np.maximum(1.0, np.abs(roots)) ** degree
    if np.any(residuals > bounds):
        worst = int(np.argmax(residuals / bounds))
        raise ConvergenceFailure(
            f"Root residual {residuals[worst]:.3e} exceeds {bounds[worst]:.3e} after {budget} iterations."
        )

    return roots[np.lexsort((roots.imag, roots.real))]
