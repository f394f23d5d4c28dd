"""Exception hierarchy shared across the package."""


class QHError(Exception):
    """Base class for all errors raised by qhtoeplitz."""


class NonLinearFactor(QHError):
    """A denominator has an irreducible factor of degree >= 2 over Q(i)."""


class PoleEvaluation(QHError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class NotStrictlyProper(QHError):
    """Inverse Mellin transform requested for a function with a polynomial part."""


class NotDifferentiableClass(QHError):
    """A symbol term cannot be written as z^a zb^b (log|z|^2)^s with integer a, b."""


class RedundancyMismatch(QHError):
    """The symbolic finite-rank certificate disagrees with the direct sweep."""


class DomainError(QHError, ValueError):
    """Arguments are outside the domain of a classification result."""


class ParamDomain(QHError, ValueError):
    """Invalid parameters for an example family."""


class ShapeMismatch(QHError, ValueError):
    """Matrix shapes do not agree."""


class ParseError(QHError, ValueError):
    """Syntax error in symbol or operator text.

    ``offset`` is the byte offset of the failure and ``expected`` the set of
    tokens that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = "%s at offset %d" % (message, offset)
        if self.expected:
            detail += " (expected one of: %s)" % ", ".join(self.expected)
        super().__init__(detail)
