"""Domain classification and convergence windows for shifted power functions.

A power function f(t) = (t - d)**beta has a real domain that depends on the
arithmetic nature of beta:

* integer beta: all of R for beta >= 0, R minus the shift point otherwise;
* reduced rational beta = p/q: R for even positive p, [d, +inf) for odd
  positive p, (d, +inf) for negative p;
* beta declared real (non-rational): (d, +inf).

No float-to-rational sniffing is done anywhere: ``RealExp(0.5)`` gets the
conservative open domain, and a caller that wants the closed one must pass
``RationalExp(1, 2)``.

The series representations converge on a half-open window attached to the
lower limit a: [a, a + eps/2) when a sits below the shift and [a, a + eps)
when it sits above, with eps = |d - a|.  A ``strict`` flag forces eps/2 on
both sides for callers that want the narrower uniform window.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from math import gcd

from .errors import CenteredNotAnalytic, LowerLimitOutsideDomain


@dataclass(frozen=True)
class IntegerExp:
    m: int


@dataclass(frozen=True)
class RationalExp:
    """Reduced fraction p/q with q >= 2; q = 1 belongs to IntegerExp."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("RationalExp requires q >= 1")
        g = gcd(self.p, self.q)
        if g > 1:
            object.__setattr__(self, "p", self.p // g)
            object.__setattr__(self, "q", self.q // g)
        if self.q == 1:
            raise ValueError("RationalExp with q = 1 normalizes to IntegerExp")


@dataclass(frozen=True)
class RealExp:
    x: float


BetaIndex = IntegerExp | RationalExp | RealExp


def beta_int(m: int) -> IntegerExp:
    return IntegerExp(int(m))


def beta_rational(p: int, q: int) -> BetaIndex:
    """Reduced rational exponent; collapses to IntegerExp when q divides p."""
    if q == 0:
        raise ValueError("rational exponent requires q != 0")
    if q < 0:
        p, q = -p, -q
    g = gcd(p, q)
    p, q = p // g, q // g
    if q == 1:
        return IntegerExp(p)
    return RationalExp(p, q)


def beta_real(x: float) -> RealExp:
    return RealExp(float(x))


def beta_value(beta: BetaIndex) -> float:
    """The exponent as a float."""
    if isinstance(beta, IntegerExp):
        return float(beta.m)
    if isinstance(beta, RationalExp):
        return beta.p / beta.q
    return beta.x


class DomainSpec(enum.Enum):
    ALL_REALS = "R"
    ALL_REALS_EXCEPT_D = "R\\{d}"
    CLOSED_FROM_D = "[d,+inf)"
    OPEN_FROM_D = "(d,+inf)"


def classify_domain(d: float, beta: BetaIndex) -> DomainSpec:
    """Real domain of (t - d)**beta, keyed on the exact nature of beta."""
    if isinstance(beta, IntegerExp):
        return DomainSpec.ALL_REALS if beta.m >= 0 else DomainSpec.ALL_REALS_EXCEPT_D
    if isinstance(beta, RationalExp):
        if beta.p > 0:
            return DomainSpec.ALL_REALS if beta.p % 2 == 0 else DomainSpec.CLOSED_FROM_D
        return DomainSpec.OPEN_FROM_D
    return DomainSpec.OPEN_FROM_D


def domain_contains(spec: DomainSpec, d: float, x: float) -> bool:
    if spec is DomainSpec.ALL_REALS:
        return True
    if spec is DomainSpec.ALL_REALS_EXCEPT_D:
        return x != d
    if spec is DomainSpec.CLOSED_FROM_D:
        return x >= d
    return x > d


def format_domain(spec: DomainSpec, d: float) -> str:
    """Human-readable domain with the shift substituted, e.g. ``(1, +inf)``."""
    if spec is DomainSpec.ALL_REALS:
        return "R"
    if spec is DomainSpec.ALL_REALS_EXCEPT_D:
        return f"R \\ {{{d:g}}}"
    if spec is DomainSpec.CLOSED_FROM_D:
        return f"[{d:g}, +inf)"
    return f"({d:g}, +inf)"


@dataclass(frozen=True)
class PowerFunction:
    """The pair (d, beta) defining f(t) = (t - d)**beta plus its real domain."""

    d: float
    beta: BetaIndex
    domain: DomainSpec

    def contains(self, x: float) -> bool:
        return domain_contains(self.domain, self.d, x)

    def value(self, t: float) -> float:
        """f(t) on the real branch; raises ValueError outside the domain."""
        if not self.contains(t):
            raise ValueError(f"t={t!r} outside domain {self.domain.value}")
        return branch_power(t - self.d, self.beta)


def power_function(d: float, beta: BetaIndex) -> PowerFunction:
    return PowerFunction(float(d), beta, classify_domain(d, beta))


def branch_power(x: float, beta: BetaIndex) -> float:
    """x**beta on the real branch selected by the exact form of beta.

    Negative bases are legal only for integer exponents and for reduced
    rationals with odd denominator; the domain rules guarantee callers stay
    inside those cases.
    """
    if isinstance(beta, IntegerExp):
        if x == 0.0 and beta.m < 0:
            raise ValueError("0 raised to a negative integer power")
        return float(x) ** beta.m
    if isinstance(beta, RationalExp):
        b = beta.p / beta.q
        if x > 0.0:
            return x ** b
        if x == 0.0:
            if beta.p > 0:
                return 0.0
            raise ValueError("0 raised to a negative rational power")
        if beta.q % 2 == 0:
            raise ValueError("negative base with even root is not real")
        mag = (-x) ** b
        return mag if beta.p % 2 == 0 else -mag
    b = beta.x
    if x > 0.0:
        return x ** b
    if x == 0.0:
        if b > 0.0:
            return 0.0
        if b == 0.0:
            return 1.0
        raise ValueError("0 raised to a negative real power")
    raise ValueError("negative base with a declared-real exponent is not real")


class WindowSide(enum.Enum):
    BELOW_D = "below"
    ABOVE_D = "above"
    CENTERED = "centered"


@dataclass(frozen=True)
class EvalWindow:
    """Validated half-open evaluation interval [t_min, t_sup) for one lower limit."""

    a: float
    epsilon: float
    t_min: float
    t_sup: float
    side: WindowSide


def make_window(a: float, pf: PowerFunction, strict: bool = False) -> EvalWindow:
    """Window for lower limit a.

    a = d is allowed only for polynomial exponents (the one case analytic at
    the shift), giving an unbounded centered window.  Otherwise the side of
    the shift fixes the window: [a, a + eps/2) below, [a, a + eps) above, and
    ``strict=True`` narrows the above side to eps/2 as well.
    """
    a = float(a)
    d = pf.d
    if a == d:
        if isinstance(pf.beta, IntegerExp) and pf.beta.m >= 0:
            return EvalWindow(a, 0.0, a, math.inf, WindowSide.CENTERED)
        raise CenteredNotAnalytic(
            f"a = d = {d!r} requested but beta={pf.beta!r} is not analytic at d")
    if not pf.contains(a):
        raise LowerLimitOutsideDomain(
            f"a={a!r} outside domain {format_domain(pf.domain, d)}")
    eps = abs(d - a)
    if a < d:
        t_sup = a + eps / 2.0
        side = WindowSide.BELOW_D
    else:
        t_sup = a + (eps / 2.0 if strict else eps)
        side = WindowSide.ABOVE_D
    return EvalWindow(a, eps, a, t_sup, side)


def check_t(win: EvalWindow, t: float) -> bool:
    """True iff t_min <= t < t_sup."""
    return win.t_min <= t < win.t_sup
