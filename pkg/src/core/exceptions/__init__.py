from src.core.exceptions.base import ChevalleyError, ComputationError, InvalidInputError
from src.core.exceptions.exact import SpanExceedsInvariants
from src.core.exceptions.invariants import PathClosureError, ResidualTooLarge
from src.core.exceptions.linalg import ClusteredSpectrum, ConvergenceFailure, DimensionMismatch, SingularMatrix
from src.core.exceptions.normal_form import NonDiagonalResidue, NotGeneric, NotInZ1, VanishingProduct
from src.core.exceptions.quiver import SamplingFailure
from src.core.exceptions.wreath import ReconstructionFailure, StabilityViolation, TooLarge

__all__ = [
    "ChevalleyError",
    "ClusteredSpectrum",
    "ComputationError",
    "ConvergenceFailure",
    "DimensionMismatch",
    "InvalidInputError",
    "NonDiagonalResidue",
    "NotGeneric",
    "NotInZ1",
    "PathClosureError",
    "ReconstructionFailure",
    "ResidualTooLarge",
    "SamplingFailure",
    "SingularMatrix",
    "SpanExceedsInvariants",
    "StabilityViolation",
    "TooLarge",
    "VanishingProduct",
]
