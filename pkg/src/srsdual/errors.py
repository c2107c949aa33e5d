"""Exception types shared across the package."""


class SrsError(Exception):
    """Base class for all srsdual errors."""


class SrsSyntaxError(SrsError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FuelExhausted(SrsError):
    """A step budget ran out before a normal form (or verdict) was reached.

    This signals possible nontermination; it is never silently converted
    into an answer.
    """

    def __init__(self, message, word=None):
        self.word = word
        super().__init__(message)


class ClassViolation(SrsError):
    """An operation was applied to a system outside its supported class."""


class NotDwindling(ClassViolation):
    pass


class NotMonadic(ClassViolation):
    pass


class NotInterReduced(ClassViolation):
    pass


class NotConvergent(ClassViolation):
    """Convergence evidence was required but absent or refuted."""


class AlphaEmpty(SrsError):
    pass


class AlphaReducible(SrsError):
    pass


class InputReducible(SrsError):
    pass


class DegenerateInput(SrsError):
    pass


class AlphabetMismatch(SrsError):
    pass


class VerificationFailed(SrsError):
    """Internal guard: a constructed witness failed direct re-verification.

    Raising this is always a bug in the construction, never a user error.
    """
