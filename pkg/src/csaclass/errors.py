"""Shared exception types."""


class CsaClassError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CsaClassError):
    """An input specification violates a structural invariant."""


class ExtensionNotSupportedError(CsaClassError):
    """Constant field extension degree is incompatible with the infinite place."""


class InvalidDivisorError(CsaClassError):
    """A level parameter s does not divide the required quantity."""


class NotDefiniteError(CsaClassError):
    """The algebra is not division at the infinite place."""


class IntegralityViolationError(CsaClassError):
    """A quantity that must be a non-negative integer is not."""


class NotPrimeDegreeError(CsaClassError):
    """The closed prime-degree formula was requested for composite degree."""


class EmptyGenusError(CsaClassError):
    """A genus vector with all-zero entries was passed to reduction."""


class BudgetExceededError(CsaClassError):
    """An enumeration exceeded the configured work budget."""
