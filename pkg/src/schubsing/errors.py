"""Exception types raised by the engine.

Every domain error derives from :class:`SchubertError` so the CLI can map
them to a single exit status.
"""


class SchubertError(Exception):
    """Base class for domain errors."""


class InvalidRank(SchubertError, ValueError):
    pass


class InvalidDescriptor(SchubertError, ValueError):
    pass


class G2Disallowed(SchubertError):
    pass


class NotARoot(SchubertError, ValueError):
    pass


class IndexOutOfRange(SchubertError, IndexError):
    pass


class NotInInterval(SchubertError):
    pass


class CriteriaDisagree(SchubertError):
    """Rational smoothness criteria gave different answers (a bug)."""


class RunTooShort(SchubertError):
    pass


class NonConsecutiveRun(SchubertError):
    pass


class MismatchedBase(SchubertError):
    pass


class CurveNotLong(SchubertError):
    pass


class NotSmoothUpperPoint(SchubertError):
    pass


class InvalidCurve(SchubertError):
    pass


class InternalInconsistency(SchubertError):
    """A cross-check between two theorems failed (a bug)."""


class NotMinimalRepresentative(SchubertError):
    pass


class QuotientOrderViolation(SchubertError):
    pass


class TangentSpaceUndetermined(SchubertError):
    pass


class NotTypeA(SchubertError):
    pass


class BudgetExceeded(SchubertError):
    pass
