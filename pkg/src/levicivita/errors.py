"""Exception hierarchy shared by every module of the package."""


class LeviCivitaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LeviCivitaError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class CarrierMismatchError(LeviCivitaError, TypeError):
    """Elements or functions from different carriers were combined."""


class PrecisionError(LeviCivitaError, ArithmeticError):
    """A requested enclosure width could not be reached within the iteration cap."""


class HypothesisViolation(LeviCivitaError, ValueError):
    """A theorem hypothesis required by a checker does not hold.

    ``witness`` holds an element demonstrating the violation, when one exists.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedCarrierError(LeviCivitaError, ValueError):
    """The operation is not available on the given carrier."""
