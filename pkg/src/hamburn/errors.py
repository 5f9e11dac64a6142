class HamburnError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(HamburnError, ValueError):
    """Operands disagree in length, n or q."""


class CapacityError(HamburnError):
    """An enumeration would exceed the configured budget."""


class NotACodewordError(HamburnError, ValueError):
    """A block is not one of the color vectors."""


class DomainError(HamburnError, ValueError):
    """An argument lies outside the set an operation is defined on."""


class UnsupportedError(HamburnError, ValueError):
    """The requested parameters are outside what the algorithm supports (e.g. q < 3)."""


class AlgorithmStateError(HamburnError, AssertionError):
    """An internal invariant of the rounding procedure was violated.

    Never expected; raising this indicates a bug.
    """
