"""Exception types shared across the package."""


class DecyclingError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(DecyclingError, ValueError):
    """A parameter is outside the range an operation is defined for."""


class UniverseMismatchError(DecyclingError, ValueError):
    """A vertex set and a graph disagree about the vertex universe."""


class NotCoveredError(DecyclingError, ValueError):
    """No closed-form value is known for the requested family."""


class CertificateFormatError(DecyclingError, ValueError):
    """A certificate document is malformed or structurally inconsistent."""


class ConstructionInvariantError(DecyclingError, RuntimeError):
    """A construction produced a set that fails its own invariant.

    This signals a bug in the construction, never bad user input.
    """


class GadgetNotFoundError(DecyclingError, RuntimeError):
    """Exhaustive search found no cylinder gadget compatible with the bases."""


class BudgetExceededError(DecyclingError, RuntimeError):
    """The exact solver ran out of its node or vertex budget."""

    def __init__(self, message: str, best_known: int | None = None):
        super().__init__(message)
        self.best_known = best_known
