"""Exception hierarchy shared by every module of the package."""


class SixVertexError(Exception):
    """Base class for all errors raised by :mod:`sixvertex`."""


class NotExpressible(SixVertexError):
    """A Laurent polynomial in omega is not a polynomial in omega^2 + omega^-2."""


class NonUnitLeading(SixVertexError):
    """Series inversion attempted with a non-invertible leading coefficient."""


class PositiveValuationRequired(SixVertexError):
    """Composition f(g) needs g without constant term."""


class BadValuation(SixVertexError):
    """Reversion needs a series of valuation exactly one."""


class TruncationError(SixVertexError):
    """A coefficient beyond the known truncation order was requested."""


class ParityMismatch(SixVertexError):
    """Derivative order incompatible with the requested theta kind."""


class CancellationFailure(SixVertexError):
    """An exact division that must succeed did not."""


class VerificationFailure(SixVertexError):
    """A built-in self check (back-substitution, cross-check) failed."""


class CapExceeded(SixVertexError):
    """Brute-force enumeration requested beyond the configured size cap."""


class OffsetMismatch(SixVertexError):
    """Eta-quotient offset is not the integer expected."""


class BadParameter(SixVertexError):
    """Invalid parameter for a special function series."""


class NoRelation(SixVertexError):
    """The kernel of the relation matrix is trivial."""


class AmbiguousRelation(SixVertexError):
    """The kernel of the relation matrix has dimension greater than one."""
