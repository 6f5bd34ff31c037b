from src.core.exceptions.base import ComputationError, InvalidInputError

"""
Dense linear algebra exceptions.

:return: module defining linear-algebra failures
"""


class DimensionMismatch(InvalidInputError):
    """
    Raised when matrix operands are not conformable.

    :return: input error for shape problems
    """

    def __init__(self, detail: str = "Matrix dimensions do not agree.") -> None:
        super().__init__(detail=detail)


class SingularMatrix(ComputationError):
    """
    Raised when an LU pivot falls below the singularity threshold.

    :return: computation error for singular matrices
    """

    def __init__(self, detail: str = "Matrix is singular to working tolerance.") -> None:
        super().__init__(detail=detail)


class ConvergenceFailure(ComputationError):
    """
    Raised when an iterative method exhausts its iteration budget.

    :return: computation error for non-convergence
    """

    def __init__(self, detail: str = "Iteration did not converge.") -> None:
        super().__init__(detail=detail)


class ClusteredSpectrum(ComputationError):
    """
    Raised when eigenvalues are too close to diagonalize reliably.

    :return: computation error for clustered eigenvalues
    """

    def __init__(self, detail: str = "Eigenvalues are not pairwise separated.") -> None:
        super().__init__(detail=detail)
