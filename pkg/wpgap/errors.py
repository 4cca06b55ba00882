"""
Exception types raised by the wpgap library.

Everything derives from WpgapError (itself a ValueError) so callers can catch
the whole family; the CLI maps these onto exit codes.
"""


class WpgapError(ValueError):
    """Base class for all library errors."""


class InvalidGapList(WpgapError):
    """Gap list is not strictly increasing or holds non-positive entries."""


class NotCoclosed(WpgapError):
    """The complement of a gap list is not closed under addition."""


class GapTooLarge(WpgapError):
    """Some gap exceeds 2g - 1."""


class NotCoprime(WpgapError):
    """Generators share a common factor, so the gap set would be infinite."""


class PreconditionViolated(WpgapError):
    """An operation was called outside its documented parameter range."""


class LengthMismatch(WpgapError):
    """Two order sequences that must pair up have different lengths."""


class GenusTooLarge(WpgapError):
    """Requested genus exceeds the configured enumeration cap."""


class GammaMismatch(WpgapError):
    """The even-gap count of a semigroup differs from the requested gamma."""


class ZeroDenominator(WpgapError):
    """A closed-form rational has a vanishing (or non-positive) denominator."""


class InvalidFilter(WpgapError):
    """An enumeration filter clause is malformed for the target genus."""
