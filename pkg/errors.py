"""
Exception hierarchy for the Torelli toolkit.

Every error raised on purpose by the library derives from TorelliError so the
CLI and the API can turn it into an exit status or an HTTP 400.
"""


class TorelliError(Exception):
    """Base class for all library errors."""


class WordSyntaxError(TorelliError):
    """A word string does not match the word grammar."""


class IndexRangeError(TorelliError, ValueError):
    """A generator or relator index is out of range for (g, b)."""


class ParityError(TorelliError):
    """The p-projection has odd length where a pairing is required."""


class ConstraintError(TorelliError):
    """An input violates an arithmetic constraint (e.g. the sum of n is not 0)."""


class MembershipError(TorelliError):
    """A certificate was requested for a word outside Gamma."""


class PresentationError(TorelliError):
    """A presentation or coset table is malformed or inconsistent."""


class ConversionError(TorelliError):
    """A relator conversion was requested in an unsupported direction."""


class PreconditionError(TorelliError):
    """A check needs more indices than the genus provides."""


class UnsupportedError(TorelliError):
    """The request lies outside the range where the generating data is known."""
