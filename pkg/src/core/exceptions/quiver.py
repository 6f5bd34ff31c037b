from src.core.exceptions.base import ComputationError

"""
Quiver representation exceptions.

:return: module defining sampling failures
"""


class SamplingFailure(ComputationError):
    """
    Raised when rejection sampling exhausts its attempt budget.

    :return: computation error for sampling
    """

    def __init__(self, detail: str = "Could not sample a well-conditioned element.") -> None:
        super().__init__(detail=detail)
