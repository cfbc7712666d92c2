"""Errors raised by the PH curve computations.

Every error carries the process exit code the management commands use for it,
so the command layer can translate any ``PHError`` without a lookup table.
"""


class PHError(Exception):
    """Base class of all domain errors."""
    exit_code = 1


class InputError(PHError):
    """Input could not be parsed or is outside what the library accepts."""
    exit_code = 2


class UnsupportedFactor(InputError):
    """A denominator has an irreducible factor of degree three or more."""


class EmptyRange(InputError):
    """A sampling range contains no parameter values."""


class MathDomainError(PHError):
    """A mathematical precondition of an operation is violated."""
    exit_code = 3


class DivisionByZero(MathDomainError, ZeroDivisionError):
    pass


class MixedRadicand(MathDomainError):
    """Two quadratic-extension scalars live in different fields."""


class BothZero(MathDomainError):
    pass


class ZeroInput(MathDomainError):
    pass


class CenterMismatch(MathDomainError):
    """An expansion center is incompatible with the curve's coefficient field."""


class LeadingCoefficientZero(MathDomainError):
    """F vanishes at the root, so the data are not primitive there."""


class DegenerateIndex(MathDomainError):
    """No normalized solution curve starts at the requested Laurent index."""


class NotARoot(MathDomainError):
    pass


class CertificateMissing(MathDomainError):
    pass


class NotInSpan(MathDomainError):
    pass


class RedundantBasis(MathDomainError):
    pass


class NotConjugatePair(MathDomainError):
    pass


class NotPHCurve(PHError):
    """The curve does not satisfy r' x F = 0.

    Args:
        residual: the vector polynomial (alpha' b - alpha b') x F, which is
            identically zero exactly for solution curves.
    """
    exit_code = 4

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
