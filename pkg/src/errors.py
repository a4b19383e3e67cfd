"""
Errors Module

Exception hierarchy shared by every package. Verification routines do not
raise for a failed claim; they return a failing Report instead.
"""


class CliffordError(Exception):
    """Base class for all errors raised by this project."""


class ScalarError(CliffordError):
    """Non-finite float or an undecodable scalar."""


class SignatureError(CliffordError):
    """Invalid (p, q), n above the configured maximum, or mismatched operands."""


class RingMismatchError(CliffordError):
    """Operands live over different coefficient rings."""


class GradeRangeError(CliffordError):
    """A grade or quaternion type outside its valid range."""


class DimensionMismatchError(CliffordError):
    """Matrix operands of incompatible sizes."""


class ConstructionError(CliffordError):
    """A representation failed its Clifford-relation self-check."""


class InvariantBreachError(CliffordError):
    """A structural property that must always hold was found broken."""


class ConvergenceError(CliffordError):
    """A series evaluation did not converge within its term budget."""


class TransportError(CliffordError):
    """A request outside the supported group isomorphism families."""


class TableConsistencyError(CliffordError):
    """Classification tables disagree with each other."""


class UnknownGroupError(CliffordError):
    """A group name that is none of the five groups or Spin+."""
