from src.core.exceptions.base import ComputationError, InvalidInputError

"""
Wreath product group exceptions.

:return: module defining group-related failures
"""


class TooLarge(InvalidInputError):
    """
    Raised when a brute-force enumeration would exceed its size cap.

    :return: input error for oversize requests
    """

    def __init__(self, detail: str = "Requested computation exceeds the size cap.") -> None:
        super().__init__(detail=detail)


class StabilityViolation(ComputationError):
    """
    Raised when a group element moves a point of L_n out of L_n.

    :return: computation error signalling an implementation defect
    """

    def __init__(self, detail: str = "Gauged point left the diagonal subspace.") -> None:
        super().__init__(detail=detail)


class ReconstructionFailure(ComputationError):
    """
    Raised when a numeric series coefficient is not close to its rational reconstruction.

    :return: computation error for rational reconstruction
    """

    def __init__(self, detail: str = "Rational reconstruction guard tripped.") -> None:
        super().__init__(detail=detail)
