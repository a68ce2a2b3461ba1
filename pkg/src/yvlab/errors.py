"""Exception hierarchy shared by all yvlab modules."""


class YvlabError(Exception):
    """Base class for every error raised by this package."""


class NonExactDivision(YvlabError):
    """A polynomial division that must be exact left a remainder.

    Raised when a divisibility invariant is violated; callers should treat
    this as corrupted state or a bug and abort.
    """


class NotPIntegral(YvlabError):
    """A rational coefficient has a denominator divisible by the prime."""


class ZeroDenominator(YvlabError):
    """Attempt to build a rational function with a zero denominator."""


class InternalMismatch(YvlabError):
    """Two independent constructions of the same object disagree (bug)."""


class NonIntegralResult(YvlabError):
    """A value that must be an integer came out fractional (bug)."""


class NonIntegralFormulaValue(NonIntegralResult):
    """A closed-form coefficient formula produced a non-integer."""


class NotPrime(YvlabError):
    """A modulus that must be prime is composite."""


class PrimeTooSmall(YvlabError):
    """The congruence being checked requires a prime larger than 3."""


class IndexOutOfRange(YvlabError, IndexError):
    """A coefficient or sequence index outside the valid range."""
