from src.core.exceptions.base import ComputationError

"""
Normal form exceptions.

:return: module defining normal-form failures
"""


class NotGeneric(ComputationError):
    """
    Raised when the cycle product has repeated or vanishing eigenvalues.

    :return: computation error for non-generic points
    """

    def __init__(self, detail: str = "Point is not generic.") -> None:
        super().__init__(detail=detail)


class NotInZ1(ComputationError):
    """
    Raised when a scalar double point violates the moment map equations.

    :return: computation error for points off Z_1
    """

    def __init__(self, detail: str = "Point does not lie on Z_1.") -> None:
        super().__init__(detail=detail)


class VanishingProduct(ComputationError):
    """
    Raised when the scalar cycle product x_1...x_m vanishes.

    :return: computation error for degenerate scalar points
    """

    def __init__(self, detail: str = "Cycle product vanishes.") -> None:
        super().__init__(detail=detail)


class NonDiagonalResidue(ComputationError):
    """
    Raised when the transported y-part is not diagonal after fixing the x-part.

    :return: computation error reporting a point off the saturation
    """

    def __init__(self, detail: str = "Transported y-part is not diagonal.") -> None:
        super().__init__(detail=detail)
