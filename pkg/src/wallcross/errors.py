"""Exception hierarchy.

Three families, each mapped to one CLI exit code:

- ParameterError: the caller asked for something outside a formula's domain (exit 2)
- ArithmeticAssertion: an exactness claim failed inside the engine (exit 3)
- VerificationFailure: a verification report came back negative (exit 1)
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .report import CheckReport


class WallcrossError(Exception):
    """Base class for all wallcross errors."""


# ============================================================
# Usage errors
# ============================================================


class ParameterError(WallcrossError):
    """Invalid parameters for a moduli space or formula."""


class InvalidGenus(ParameterError):
    """Genus below 2."""


class NotAWall(ParameterError):
    """A value used as a wall is not a critical value for the degree."""


class ParityMismatch(ParameterError):
    """An index set or stratum was requested for the wrong degree parity."""


class IndexNotInSet(ParameterError):
    """A splitting (d1, d2) is not in the index set a formula requires."""


class DegreeTooLow(ParameterError):
    """The moduli space is empty for this degree."""


class PoleOrderTooSmall(ParameterError):
    """The infinity regime of the poles variant needs gamma > d."""


class CriticalSigma(ParameterError):
    """A stability parameter sits exactly on a wall."""


class GraphFormatError(ParameterError):
    """A dual graph description could not be parsed."""


class PolynomialFormatError(ParameterError):
    """A serialized polynomial could not be decoded."""


# ============================================================
# Internal arithmetic assertions
# ============================================================


class ArithmeticAssertion(WallcrossError):
    """An exact-arithmetic claim failed (formula misuse or transcription error)."""


class NonExactDivision(ArithmeticAssertion):
    """Polynomial division left a nonzero remainder."""


class BadDenominator(ArithmeticAssertion):
    """A denominator factor cannot be expanded as a geometric series."""


class NegativeExponent(ArithmeticAssertion):
    """A negative exponent where only t may go negative.

    Also raised when a specialization that must be polynomial has negative t-exponents.
    """


class NonIntegral(ArithmeticAssertion):
    """A result that must have integer coefficients does not."""


class NegativeCoefficient(ArithmeticAssertion):
    """A result that must have nonnegative coefficients does not."""


class TruncationNotZero(ArithmeticAssertion):
    """Coefficients that must vanish beyond a degree bound do not."""


# ============================================================
# Verification failures
# ============================================================


class VerificationFailure(WallcrossError):
    """A verification report failed."""

    def __init__(self, report: CheckReport) -> None:
        super().__init__(report.summary())
        self.report = report


class RangeMismatch(VerificationFailure):
    """F^vir and G disagree inside a range where they must coincide."""
