"""Exception hierarchy shared across the toolkit."""


class HexagramError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(HexagramError):
    """A caller violated a documented precondition (mixed fields, missing
    variable assignment, mismatched rings, malformed label syntax, ...)."""


class FieldMismatchError(UsageError):
    """Operands belong to different finite fields."""


class ReducibleModulusError(HexagramError):
    """An extension-field inversion found a nontrivial gcd with the modulus.

    The gcd is a proper factor of the modulus, so the 'field' was not a
    field after all.  We report the factor rather than silently proceed.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class DegenerateGeometryError(HexagramError):
    """A projective construction degenerated (proportional arguments,
    tangency where a chord was required, collapsed hexad position)."""


class TheoremViolationError(HexagramError):
    """An incidence that a classical theorem guarantees failed to hold.

    This must never fire on valid inputs; it indicates a bug.
    """


class NotZeroDimensionalError(HexagramError):
    """A quotient-ring computation was asked for on an ideal whose
    quotient is infinite-dimensional."""


class UnsupportedDegreeError(HexagramError):
    """A univariate operation needs deg f < p (derivative criterion)."""


class NonGenericLinesError(HexagramError):
    """Random line draws kept producing a non-zero-dimensional system
    even after the configured retry limit."""


class ConsistencyError(HexagramError):
    """An internal cross-check failed (a reported solution does not
    satisfy the generators, two counting routes disagree, ...)."""


class CacheError(HexagramError):
    """The on-disk trial cache is unreadable or corrupt."""
