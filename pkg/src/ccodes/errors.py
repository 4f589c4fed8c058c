"""Exception types shared across the library.

Everything except RankDeficiencyError subclasses ValueError, so callers
that only care about "bad input" can catch that.  RankDeficiencyError
flags an internal consistency failure and is a RuntimeError.
"""


class NotPrimeError(ValueError):
    """The requested field characteristic is not a prime number."""


class DegreeRangeError(ValueError):
    """A degree parameter lies outside its valid range."""


class RankRangeError(ValueError):
    """A 1-based rank lies outside its valid range."""


class FieldMismatchError(ValueError):
    """Operands belong to different finite fields."""


class DimensionMismatchError(ValueError):
    """Objects disagree on their number of coordinates."""


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no leading term."""


class DuplicateLeadingTermError(ValueError):
    """Leading terms passed to the footprint bound must be distinct."""


class BudgetExceededError(ValueError):
    """An exhaustive oracle would exceed its configured work budget."""


class RankDeficiencyError(RuntimeError):
    """A matrix expected to have full row rank does not."""
