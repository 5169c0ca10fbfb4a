"""Exception hierarchy shared by every module."""


class CrouzeixError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CrouzeixError, ValueError):
    """Malformed matrix, file or parameter."""


class DomainError(CrouzeixError, ValueError):
    """Spectrum or numerical range outside a function's domain."""


class SingularityError(CrouzeixError, ArithmeticError):
    """Resolvent requested too close to the spectrum."""


class ConvergenceError(CrouzeixError, ArithmeticError):
    """An iterative kernel ran out of budget.

    ``residual`` carries the last measured residual when one is available.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ContourError(CrouzeixError, ValueError):
    """A contour fails to separate the spectrum."""


class DegeneracyError(CrouzeixError, ArithmeticError):
    """A constructed similarity is numerically singular."""


class ContainmentError(CrouzeixError, ValueError):
    """A neighbourhood does not contain the numerical range."""


class ConsistencyError(CrouzeixError, ArithmeticError):
    """Boundary classification disagrees with the block structure."""


class CeilingViolation(CrouzeixError, AssertionError):
    """An estimate reached 1 + sqrt(2); always a bug."""


class BoundCheckError(CrouzeixError, AssertionError):
    """The similarity bound chain failed for a lower-bound estimate."""


class ReportIOError(CrouzeixError, OSError):
    """A report or plot could not be written."""
