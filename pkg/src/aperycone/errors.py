"""Exception types shared across the package.

Every domain failure raises a subclass of SemigroupError so that callers,
and in particular the command line front end, can tell bad mathematical
input apart from programming errors.  The command line maps SemigroupError
to exit code 3.
"""

from __future__ import annotations

__all__ = [
    "SemigroupError",
    "EmptyInputError",
    "InvalidGeneratorError",
    "GcdNotOneError",
    "RangeOverflowError",
    "TrivialSemigroupError",
    "NotInSemigroupError",
    "ColumnOutOfRangeError",
    "ParamTooSmallError",
    "NotAFamilyError",
    "TooLargeError",
]


class SemigroupError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyInputError(SemigroupError):
    """No generators were supplied."""


class InvalidGeneratorError(SemigroupError):
    """A generator is zero or negative."""


class GcdNotOneError(SemigroupError):
    """The generators have gcd greater than one, so the set of gaps would be infinite."""


class RangeOverflowError(SemigroupError):
    """A value left the checked 63-bit nonnegative range.

    Python integers never wrap, so this is a contract check, not a safety
    one: results are promised to fit machine-word consumers.
    """


class TrivialSemigroupError(SemigroupError):
    """The semigroup is all nonnegative integers; the requested quantity is
    undefined for it (the largest gap would conventionally be -1)."""


class NotInSemigroupError(SemigroupError):
    """An argument had to be a semigroup element but is not."""

    def __init__(self, value: int, detail: str = ""):
        tail = f" ({detail})" if detail else ""
        super().__init__(f"{value} is not an element of the semigroup{tail}")
        self.value = value


class ColumnOutOfRangeError(SemigroupError):
    """A table column index was outside 1 .. multiplicity - 1."""


class ParamTooSmallError(SemigroupError):
    """A family parameter was below the smallest value for which the family is defined."""


class NotAFamilyError(SemigroupError):
    """A family-only operation was requested for a semigroup outside both families."""


class TooLargeError(SemigroupError):
    """Input exceeds the size guard of the brute force oracle."""
