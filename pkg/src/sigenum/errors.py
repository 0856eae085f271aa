"""Exception hierarchy shared by every module of the package."""


class SigenumError(Exception):
    """Base class for all errors raised by sigenum."""


class DimacsError(SigenumError, ValueError):
    """Malformed DIMACS input."""


class TautologyError(DimacsError):
    """A clause contains a variable with both polarities.

    ``index`` is the 1-based position of the offending clause.
    """

    def __init__(self, index: int):
        super().__init__(f"tautological clause at index {index}")
        self.index = index


class UndeterminedClauseError(SigenumError):
    def __init__(self, index: int):
        super().__init__(f"clause {index} is undetermined under the assignment")
        self.index = index


class EngineMismatchError(SigenumError):
    """The SAT engine cannot handle the formula class it was handed."""


class ResourceLimitError(SigenumError):
    """A configured guard refused an exponential sweep."""


class InvariantViolation(SigenumError, AssertionError):
    """An internal structural invariant failed; always a bug or a theory gap."""
