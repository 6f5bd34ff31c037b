from src.core.exceptions.base import ComputationError

"""
Exact-arithmetic exceptions.

:return: module defining failures of the exact generation checks
"""


class SpanExceedsInvariants(ComputationError):
    """
    Raised when generator products span more than the invariant dimension allows.

    :return: computation error signalling an inconsistent exact pipeline
    """

    def __init__(self, detail: str = "Span of generator products exceeds the Molien dimension.") -> None:
        super().__init__(detail=detail)
