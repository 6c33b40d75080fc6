"""Exception types shared across the package.

Validation failures (bad lower limits, out-of-window evaluation points,
degenerate parameters) are raised before any numeric work starts, so a caller
that catches these never sees a half-computed result.
"""

from __future__ import annotations


class RLPowerError(Exception):
    """Base class for every error raised by this package."""


class LowerLimitOutsideDomain(RLPowerError, ValueError):
    """Lower limit a does not belong to the power function's real domain."""


class CenteredNotAnalytic(RLPowerError, ValueError):
    """a = d requested for an exponent whose power function is not analytic at d."""


class WindowViolation(RLPowerError, ValueError):
    """Evaluation point t lies outside the validated convergence window."""


class EvalAtLowerLimit(RLPowerError, ValueError):
    """t = a requested where the derivative series is genuinely singular."""


class SeriesNotConverged(RLPowerError, ArithmeticError):
    """Term cap reached with the tail bound still above tolerance.

    Carries the partial result so diagnostics keep the terms consumed and the
    last tail bound.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class BetaOutOfRange(RLPowerError, ValueError):
    """Exponent outside the validity range of the centered closed forms."""


class NumeratorPole(RLPowerError, ArithmeticError):
    """Gamma ratio with a pole in the numerator only: the ratio is infinite."""


class ArgOutOfDisk(RLPowerError, ValueError):
    """Hypergeometric series argument outside the unit disk (non-terminating)."""


class ParamPole(RLPowerError, ArithmeticError):
    """Hypergeometric denominator parameter hits a non-positive integer first."""


class DegenerateExponentSum(RLPowerError, ValueError):
    """Connection formula requested with an integer exponent sum."""


class PoleInsideInterval(RLPowerError, ValueError):
    """Quadrature interval touches the integrand pole for a negative exponent."""


class ToleranceNotMet(RLPowerError, ArithmeticError):
    """Adaptive quadrature exhausted its depth budget above tolerance."""


class StepTooLarge(RLPowerError, ValueError):
    """Finite-difference step would cross the lower limit."""


class OutOfRadius(RLPowerError, ValueError):
    """Logarithm reference requested outside the series' radius of convergence."""
