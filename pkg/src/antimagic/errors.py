"""Exception types shared across the package."""


class AntimagicError(Exception):
    """Base class for all package errors."""


class MalformedLabelingError(AntimagicError):
    """Labels are not a bijection onto the expected window."""


class RejectedInstanceError(AntimagicError):
    """Input fails a hypothesis of the construction it was handed to."""


class ConstructionBugError(AntimagicError):
    """A construction produced output that its own guarantees forbid.

    This must never fire on inputs satisfying the preconditions; it is a
    release blocker, not a user error.
    """


class UnsupportedInstanceError(AntimagicError):
    """No available strategy covers the instance."""


class BudgetError(AntimagicError):
    """Instance exceeds a search budget (e.g. oracle edge cap)."""


class GenerationFailureError(AntimagicError):
    """Random generator exhausted its retry budget."""


class ParseError(AntimagicError):
    """Text input failed to parse.

    Attributes:
        line: 1-based line number where parsing failed, when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line
