"""Exception types shared across the library.

Every domain error raised by the package derives from ``BoxFieldError`` so
callers (and the CLI) can separate domain failures from genuine bugs.
"""


class BoxFieldError(Exception):
    """Base class for all library errors."""


class DescriptorMismatch(BoxFieldError):
    """Two group values with different descriptors were combined."""


class EmptyList(BoxFieldError):
    """An operation that needs at least one component received none."""


class ArityMismatch(BoxFieldError):
    """Tuple length does not match the descriptor's component count."""


class NonPositiveInput(BoxFieldError):
    """A strictly positive value was required."""


class UnsupportedGroup(BoxFieldError):
    """The descriptor is not one of the structured group shapes."""


class UnknownClass(BoxFieldError):
    """The class identifier does not belong to the field's generator set."""


class NotSimple(BoxFieldError):
    """Exponent list has repeated entries."""


class GroupMismatch(BoxFieldError):
    """Series arguments live over different exponent groups."""


class ZeroOrUnknownLeading(BoxFieldError):
    """No leading term: the series is zero or truncated with nothing stored."""


class IndeterminateSign(BoxFieldError):
    """Truncated data cannot certify a sign."""


class IndeterminateComparison(BoxFieldError):
    """The difference is truncated away before a nonzero term appears."""


class UnknownLeading(BoxFieldError):
    """A truncated factor with no stored term cannot bound a product."""


class NonInvertibleCoefficient(BoxFieldError):
    """The leading coefficient has no usable inverse."""


class NotLexSumGroup(BoxFieldError):
    """The operation needs a two-component lexicographic exponent group."""


class NotExact(BoxFieldError):
    """The operation is only defined for exact (untruncated) series."""


class ZeroLeading(BoxFieldError):
    """Naive inversion needs a nonzero leading coefficient."""


class ParseError(BoxFieldError):
    """Syntax error in a text expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
