"""Exception types raised by the library."""


class StampfliError(Exception):
    """Base class for all library errors."""


class InputError(StampfliError, ValueError):
    """Malformed matrix input: wrong shape, non-finite entries, bad argument."""


class DegenerateInputError(InputError):
    """Input is well formed but the requested object is undefined for it."""


class ConvergenceError(StampfliError, RuntimeError):
    """An iterative method hit its iteration cap.

    ``best`` carries the best-so-far result when one exists.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
