"""Exception types raised by the library.

Every error is a ``ValueError`` so callers that only care about bad input
can catch that; the CLI maps all of them to exit code 2.
"""


class GrassError(ValueError):
    """Base class for all library errors."""


class DuplicateElement(GrassError):
    pass


class TooSmall(GrassError):
    pass


class MismatchedK(GrassError):
    pass


class WindowTooSmall(GrassError):
    pass


class WindowTooLarge(GrassError):
    pass


class ExponentOutOfRange(GrassError):
    pass


class NotCofinite(GrassError):
    pass


class NotCommon(GrassError):
    pass


class DegenerateK(GrassError):
    pass


class BadCardinality(GrassError):
    pass


class ColumnMissing(GrassError):
    pass


class NotAComplex(GrassError):
    """The two oracle maps do not compose to zero. Always a bug, never user error."""
