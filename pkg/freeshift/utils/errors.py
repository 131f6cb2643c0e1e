from typing import Any, Optional


class FreeShiftError(Exception):
    """Base class of every error raised by freeshift."""


class InvalidInputError(FreeShiftError, ValueError):
    """Input that cannot be computed on. Maps to exit code 2."""


class InvalidGeneratorError(InvalidInputError):
    pass


class MalformedBallError(InvalidInputError):
    pass


class MalformedInputError(InvalidInputError):
    pass


class InvalidParameterError(InvalidInputError):
    pass


class InvalidDistributionError(InvalidInputError):
    pass


class InvalidMeasureError(InvalidInputError):
    pass


class UnsupportedModeError(InvalidInputError):
    pass


class BudgetExceededError(FreeShiftError, RuntimeError):
    """
    An enumeration or table would exceed the configured budget.
    Maps to exit code 3.
    """

    def __init__(
        self,
        what: str,
        required: Optional[int],
        limit: int,
        partial: Any = None,
    ) -> None:
        """
        Args:
            `what`: Description of the object that was too large.
            `required`: Size that would have been needed, if known.
            `limit`: The budget in force.
            `partial`: Completed part of the computation, if any.
        """
        self.what = what
        self.required = required
        self.limit = limit
        self.partial = partial
        if required is None:
            msg = f"Budget of {limit} exceeded while computing {what}"
        else:
            msg = f"{what} needs {required} > budget {limit}"
        super().__init__(msg)
