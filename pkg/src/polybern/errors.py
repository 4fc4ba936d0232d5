"""Error types shared across the package."""


class PolybernError(ValueError):
    """Base class for all domain errors raised by this package."""


class NonUnitLeadingCoefficient(PolybernError):
    """Series division needs an invertible constant term in the divisor."""


class NonzeroInnerConstant(PolybernError):
    """Series composition needs an inner series with zero constant term."""


class ConstantTermNotOne(PolybernError):
    """Series logarithm needs a series with constant term 1."""


class NonzeroConstantTerm(PolybernError):
    """Series exponential needs a series with zero constant term."""


class NotDelta(PolybernError):
    """Reversion / Sheffer checks need a delta series (order exactly 1)."""


class NotInvertible(PolybernError):
    """Sheffer checks need an invertible series (nonzero constant term)."""


class PrecisionExceeded(PolybernError):
    """An index or polynomial degree does not fit the working precision."""


class UnknownIdentity(PolybernError):
    """The identity catalog has no entry with the requested name."""
