"""
Base exception carrying a process exit code, the way HTTP exceptions carry a status code.

:return: module defining the root exception classes
"""

INPUT_ERROR_EXIT_CODE = 2
VERIFICATION_FAILURE_EXIT_CODE = 1


class ChevalleyError(Exception):
    """
    Base class for all domain exceptions.

    :return: initialized exception with exit code and detail
    """

    def __init__(self, exit_code: int, detail: str) -> None:
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


class InvalidInputError(ChevalleyError):
    """
    Raised when caller-provided data violates a precondition.

    :return: exception mapped to exit code 2
    """

    def __init__(self, detail: str = "Invalid input data.") -> None:
        super().__init__(exit_code=INPUT_ERROR_EXIT_CODE, detail=detail)


class ComputationError(ChevalleyError):
    """
    Raised when a computation cannot produce a trustworthy result.

    :return: exception mapped to exit code 1
    """

    def __init__(self, detail: str = "Computation failed.") -> None:
        super().__init__(exit_code=VERIFICATION_FAILURE_EXIT_CODE, detail=detail)
