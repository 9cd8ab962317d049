"""Exception types shared across the library.

Everything algebraic derives from :class:`AlgebraError` so callers (and
the command line driver) can distinguish "the input is malformed text"
(:class:`ExprSyntaxError`) from "the requested operation does not exist
in this ring" (everything else).
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all arithmetic and structural failures."""


class ContextMismatchError(AlgebraError):
    """Operands live in different contexts (ring, dimension or truncation)."""


class TruncationError(AlgebraError):
    """A coefficient beyond the truncation order was requested or supplied.

    Coefficients above the truncation order are unknown, not zero, so
    asking for one is an error rather than a default.
    """


class AccuracyError(TruncationError):
    """A Laurent coefficient outside the guaranteed window was requested."""


class NotAUnitError(AlgebraError):
    """Inversion was requested for an element with no multiplicative inverse."""


class NotInvertibleError(AlgebraError):
    """A map or group element fails its invertibility criterion."""


class ExactDivisionError(AlgebraError):
    """An exact quotient was requested where none exists."""


class ZeroSeriesError(AlgebraError):
    """The vertex (or another support-derived datum) of the zero series."""


class InternalCheckError(AlgebraError):
    """A self-verification that must hold by construction failed.

    Raised for instance when an inverse fails to multiply back to the
    identity; this indicates a bug, never bad user input.
    """


class ExprSyntaxError(Exception):
    """Malformed expression text.

    ``offset`` is the byte position of the first offending character.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
