from src.core.exceptions.base import ComputationError, InvalidInputError

"""
Invariant evaluation exceptions.

:return: module defining invariant-related failures
"""


class PathClosureError(InvalidInputError):
    """
    Raised when a trace word does not close up at its base vertex.

    :return: input error for malformed trace words
    """

    def __init__(self, detail: str = "Trace word does not form a closed path.") -> None:
        super().__init__(detail=detail)


class ResidualTooLarge(ComputationError):
    """
    Raised when an input point is not on the moment-map zero set.

    :return: computation error for off-variety inputs
    """

    def __init__(self, detail: str = "Moment map residual exceeds tolerance.") -> None:
        super().__init__(detail=detail)
