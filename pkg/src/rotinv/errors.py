"""Exception hierarchy shared by all rotinv modules."""


class RotinvError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RotinvError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class InvalidEigenvalueError(DomainError):
    """The requested weight s is not in the spectrum of the given order."""


class InvalidAnchorError(DomainError):
    """The anchor pair (p, q) is not a positive eigenvalue of order p."""


class IncompleteTableError(RotinvError, KeyError):
    """A moment table is missing entries required by the operation."""


class DegenerateInputError(RotinvError):
    """The input shape has no usable mass (or violates a positivity rule)."""


class DegenerateShapeError(DegenerateInputError):
    """A denominator invariant vanishes on this shape.

    Carries the name of the vanishing generator in ``generator``.
    """

    def __init__(self, generator, message=None):
        self.generator = generator
        super().__init__(message or f"generator {generator} vanishes on this shape")


class DegreeCapExceededError(RotinvError):
    """The completion search hit the configured degree cap while still active.

    This never happens for well-formed weight vectors (the search always
    terminates); it guards against malformed input or implementation bugs.
    """
