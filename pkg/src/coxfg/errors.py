"""Exception types.  Each carries the CLI exit code it maps to."""
from __future__ import annotations


class CoxError(Exception):
    exit_code = 4


class InvariantError(CoxError):
    """An internal consistency check failed.  Always a bug."""
    exit_code = 4


class RankMismatchError(CoxError, ValueError):
    """Two classes (or a class and a model) disagree on r."""
    exit_code = 2


class InvalidConfigError(CoxError, ValueError):
    exit_code = 2


class InvalidRootError(CoxError, ValueError):
    """A reflector failed R^2 = -2 or R.K = 0."""
    exit_code = 2


class NotInfiniteCaseError(CoxError, ValueError):
    """Witness requested for a configuration not classified as infinite."""
    exit_code = 2


class CapacityError(CoxError):
    exit_code = 3


class IntegerOverflow(CapacityError, OverflowError):
    """A coefficient left the signed 64-bit range."""


class UnboundedSearchError(CapacityError):
    """Enumeration with r >= 9 requested without a degree bound."""


class WindowExceededError(CapacityError):
    """Root closure left the degree window; `partial` holds what was found."""

    def __init__(self, message: str, partial=()):
        super().__init__(message)
        self.partial = tuple(partial)


class InfiniteCaseError(CapacityError):
    """The (-1)-curve set is infinite or undecided; use the weyl module."""


class NotFinitelyGeneratedError(CapacityError):
    """Effective cone requested for an infinite case.

    `witness` is a zero-argument callable producing sample classes.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
