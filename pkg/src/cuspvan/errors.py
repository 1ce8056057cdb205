"""Exception types shared across the package."""


class CuspvanError(Exception):
    """Base class for all package errors."""


class InvalidPrime(CuspvanError):
    """A supplied modulus base is not prime."""


class DomainMismatch(CuspvanError):
    """Operands live over different primes p."""


class UnsupportedLevel(CuspvanError):
    """Operation needs a higher character level (k >= 2)."""


class DomainError(CuspvanError):
    """Input lies outside the mathematical domain of the operation."""


class InvalidDescriptor(CuspvanError):
    """A representation descriptor violates a structural invariant."""


class LevelOutOfRange(CuspvanError):
    """Cusp parameter l outside 0 <= l <= a(pi)."""


class AmbiguousBound(CuspvanError):
    """The requested quantity is only bounded, not determined, by the data.

    The best available bound is carried in the ``bound`` attribute.
    """

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class Unsupported(CuspvanError):
    """Operation is not defined for this descriptor kind."""


class WindowError(CuspvanError):
    """Requested index lies outside the computed table window."""


class InternalInconsistency(CuspvanError):
    """Two independent computation routes disagreed."""


class NotADivisor(CuspvanError):
    """Expected a (positive) divisor of the level N."""


class NotElliptic(CuspvanError):
    """Input violates the weight-2, trivial-nebentypus admissibility rules."""


class BadMatrix(CuspvanError):
    """Matrix is not a valid scaling matrix for the given cusp."""
