"""
Exception hierarchy shared by every prism-equitable subpackage.

Operations that have a regular "no answer" outcome (UNSAT, NotApplicable,
no window improvement) return a value instead of raising. Everything here
signals either bad input or a broken internal guarantee.
"""

from typing import Optional


class PrismError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(PrismError, ValueError):
    """A parameter is outside its documented range (n < 3, k = 0, ...)."""


class BudgetExceeded(PrismError):
    """A search or enumeration limit was reached before the answer was known."""

    def __init__(self, message: str, limit: Optional[int] = None):
        super().__init__(message)
        self.limit = limit


class Unsatisfiable(PrismError):
    """The list assignment admits no proper coloring."""


class Falsified(PrismError):
    """
    Exact search finished without a bounded coloring.

    Either the implementation is wrong or the assignment is a counterexample;
    the serialized assignment is kept so it can be replayed.
    """

    def __init__(self, message: str, assignment_text: str = ""):
        super().__init__(message)
        self.assignment_text = assignment_text


class BlueRunTooLong(PrismError):
    """Four or more consecutive rungs carry a blue vertex, or every rung does."""

    def __init__(self, start: Optional[int], length: int):
        if start is None:
            message = f"all {length} rungs are blue, so the run has no start and no blank rung"
        else:
            message = f"blue run of length {length} starting at rung {start}"
        super().__init__(message)
        self.start = start
        self.length = length

    @property
    def cyclic(self) -> bool:
        return self.start is None


class MoveError(PrismError):
    """A transcribed recoloring move produced an improper or non-decreasing coloring."""


class IdentityViolation(PrismError):
    """A counting identity that must hold exactly did not."""


class FormatError(PrismError, ValueError):
    """Malformed text input; carries the 1-based line number."""

    def __init__(self, message: str, line: int = 0, source: str = "<text>"):
        super().__init__(f"{source}:{line}: {message}" if line else message)
        self.line = line
        self.source = source
