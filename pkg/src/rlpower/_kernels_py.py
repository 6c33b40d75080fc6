"""Scalar numeric kernels: gamma core, operator series loops, 2F1 series.

Pure-Python twin of the compiled module ``_kernels_cy``.  The two files must
be kept in lockstep: same function names, same argument order, same branch
structure.  Everything works on plain floats so the compiled build carries no
CPython object traffic inside the hot loops.

Conventions used throughout:

* ``A``  is the signed gap a - d between the lower limit and the shift,
* ``u``  is the signed offset t - a (non-negative once validated),
* ``sa`` is the signed order: +alpha for the integral, -alpha for the
  derivative, so one loop serves both operators,
* ``front`` is the real-branch value of (a - d)**beta supplied by the caller;
  dividing by the signed ``A`` in the term recurrence then reproduces the
  correct alternating signs on the left side of the shift.
"""

from __future__ import annotations

import math

SQRT_TWO_PI = 2.5066282746310002

# Lanczos coefficients, g = 7, n = 9.
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

STATUS_CONVERGED = 0
STATUS_TRUNCATED = 1
STATUS_DIVERGED = 2
STATUS_PARAM_POLE = 3
STATUS_ARG_OUT = 4

_INT_TOL = 1e-12
_HUGE = 1e290
_EPS = 2.220446049250313e-16


def sinpi(x: float) -> float:
    """sin(pi*x) with argument reduction done on x, accurate near integers."""
    n = math.floor(x + 0.5)
    s = math.sin(math.pi * (x - n))
    if int(n) & 1:
        return -s
    return s


def nonpos_int_index(x: float) -> int:
    """Return n >= 0 when x is within 1e-12 of -n, else -1."""
    if x > 0.5:
        return -1
    n = math.floor(x + 0.5)
    if abs(x - n) <= _INT_TOL:
        return int(-n)
    return -1


def _gamma_positive(z: float) -> float:
    # z >= 0.5 only
    if z > 180.0:
        return math.inf
    z -= 1.0
    acc = _LANCZOS[0]
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z + i)
    t = z + 7.5
    return SQRT_TWO_PI * t ** (z + 0.5) * math.exp(-t) * acc


def gamma_value(z: float) -> float:
    """Gamma for non-pole arguments; reflection below 0.5."""
    if z < 0.5:
        return math.pi / (sinpi(z) * _gamma_positive(1.0 - z))
    return _gamma_positive(z)


def gamma_sign(z: float) -> float:
    """Sign of Gamma at a non-pole argument."""
    if z > 0.0:
        return 1.0
    return 1.0 if sinpi(z) > 0.0 else -1.0


def series_tail_bound(beta: float, beta_is_int: int, A: float, u: float,
                      sa: float, p: int) -> float:
    """Upper bound on the tail after the first p series indices.

    Integration-by-parts estimate: the |t - x| factor is bounded by its
    endpoint value and the |x - d| power is integrated exactly, which is valid
    on both sides of the shift.  For negative integer exponents the simpler
    geometric form is used with the side-dependent endpoint: |t - d| below the
    shift, |a - d| above it (the below-side factor is not an upper bound above
    the shift).
    """
    if u <= 0.0:
        return 0.0
    abs_a = abs(A)
    abs_td = abs(A + u)
    if sa + p - 1.0 < 0.0:
        # First derivative-side truncation: integrate (t-x)^sa exactly and
        # bound |x-d|^(beta-1) by its endpoint maximum.
        if sa <= -1.0 + _INT_TOL:
            return math.inf
        w = max(abs_a ** (beta - 1.0), abs_td ** (beta - 1.0))
        return abs(beta) * w * u ** (1.0 + sa) / math.exp(math.lgamma(2.0 + sa))
    if beta_is_int:
        m = int(math.floor(beta + 0.5))
        if m >= 0:
            if p >= m + 1:
                return 0.0
            ln_ratio = math.lgamma(m + 1.0) - math.lgamma(m - p + 2.0)
        else:
            mm = float(-m)
            omega = abs_td if A < 0.0 else abs_a
            ln_b = (math.lgamma(mm + p) - math.lgamma(mm) - math.lgamma(sa + p)
                    + sa * math.log(u) + p * (math.log(u) - math.log(omega))
                    - mm * math.log(omega))
            return math.exp(ln_b)
    else:
        if p <= beta + 1.0:
            ln_ratio = math.lgamma(beta + 1.0) - math.lgamma(beta - p + 2.0)
        else:
            # |Gamma(beta-p+2)| rewritten through reflection so no huge
            # intermediate gamma is ever formed.
            ln_ratio = (math.lgamma(beta + 1.0) + math.log(abs(sinpi(beta)))
                        - math.log(math.pi) + math.lgamma(p - beta - 1.0))
    nu = beta - p + 1.0
    e1 = nu * math.log(abs_td)
    e2 = nu * math.log(abs_a)
    if e1 >= e2:
        big, small = e1, e2
    else:
        big, small = e2, e1
    brace = -math.expm1(small - big)
    return math.exp(ln_ratio - math.lgamma(sa + p)
                    + (sa + p - 1.0) * math.log(u) + big) * brace


def _start_index(sa: float) -> int:
    # Smallest k with 1/Gamma(sa+k+1) finite and nonzero; skips the exact
    # zero coefficients at sa = -1 (classical-derivative reduction).
    n = nonpos_int_index(sa + 1.0)
    if n < 0:
        return 0
    return n + 1


def power_series(front: float, beta: float, A: float, u: float, sa: float,
                 beta_is_int: int, tol: float, max_terms: int):
    """Displaced power-operator series.

    Sums ``Gamma(beta+1) (a-d)^(beta-k) (t-a)^(sa+k) /
    (Gamma(beta-k+1) Gamma(sa+k+1))`` over k with Neumaier compensation and
    the coefficient recurrence ``*(beta-k) u / ((sa+k+1) A)``.

    The reported bound covers both the analytic tail and the summation's
    roundoff floor eps * sum|term|: alternating series whose terms grow far
    above the result (steep exponents near the window edge) cannot reach
    tolerances below that floor in doubles, and claiming otherwise would be
    lying.  Returns ``(value, terms_used, bound, status)``.
    """
    if u == 0.0 and sa > 0.0:
        return 0.0, 0, 0.0, STATUS_CONVERGED
    k0 = _start_index(sa)
    coef = front
    for j in range(k0):
        coef *= (beta - j) / A
    term = coef * u ** (sa + k0) / gamma_value(sa + k0 + 1.0)
    total = 0.0
    comp = 0.0
    sum_abs = 0.0
    k = k0
    added = 0
    bound = math.inf
    status = STATUS_TRUNCATED
    while True:
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        sum_abs += abs(term)
        added += 1
        p = k + 1
        value = total + comp
        if not math.isfinite(value) or abs(term) > _HUGE:
            bound = math.inf
            status = STATUS_DIVERGED
            break
        term = term * (beta - k) * u / ((sa + k + 1.0) * A)
        k += 1
        scale = abs(value)
        if scale < 1.0:
            scale = 1.0
        if abs(term) <= tol * scale:
            bound = series_tail_bound(beta, beta_is_int, A, u, sa, p)
            if bound <= tol * scale:
                if _EPS * sum_abs <= tol * scale:
                    status = STATUS_CONVERGED
                # roundoff floor above tolerance: more terms cannot help
                break
        if added >= max_terms:
            bound = series_tail_bound(beta, beta_is_int, A, u, sa, p)
            break
    floor = _EPS * sum_abs
    if floor > bound:
        bound = floor
    return total + comp, added, bound, status


def power_series_partial(front: float, beta: float, A: float, u: float,
                         sa: float, p: int) -> float:
    """Exact partial sum over series indices 0..p-1 (zero coefficients included)."""
    if p <= 0:
        return 0.0
    if u == 0.0 and sa > 0.0:
        return 0.0
    k0 = _start_index(sa)
    if k0 >= p:
        return 0.0
    coef = front
    for j in range(k0):
        coef *= (beta - j) / A
    term = coef * u ** (sa + k0) / gamma_value(sa + k0 + 1.0)
    total = 0.0
    comp = 0.0
    for k in range(k0, p):
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        term = term * (beta - k) * u / ((sa + k + 1.0) * A)
    return total + comp


def neg_int_series(m: int, A: float, u: float, sa: float, tol: float,
                   max_terms: int):
    """Alternating form for beta = -m: sum of
    ``(-1)^k Gamma(m+k) (a-d)^{-(m+k)} (t-a)^{sa+k} / (Gamma(m) Gamma(sa+k+1))``.

    Same contract as :func:`power_series`; kept as a separate accumulation so
    the two routes really are independent arithmetic paths.
    """
    if u == 0.0 and sa > 0.0:
        return 0.0, 0, 0.0, STATUS_CONVERGED
    k0 = _start_index(sa)
    # r_k = Gamma(m+k)/(Gamma(m) Gamma(sa+k+1)); s_k = (-1)^k A^{-(m+k)} u^{sa+k}
    r = 1.0
    for j in range(k0):
        r *= (m + j)
    r /= gamma_value(sa + k0 + 1.0)
    s = A ** (-(m + k0)) * u ** (sa + k0)
    if k0 & 1:
        s = -s
    total = 0.0
    comp = 0.0
    sum_abs = 0.0
    k = k0
    added = 0
    bound = math.inf
    status = STATUS_TRUNCATED
    while True:
        term = r * s
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        sum_abs += abs(term)
        added += 1
        p = k + 1
        value = total + comp
        if not math.isfinite(value) or abs(term) > _HUGE:
            bound = math.inf
            status = STATUS_DIVERGED
            break
        r = r * (m + k) / (sa + k + 1.0)
        s = s * (-u) / A
        k += 1
        nxt = r * s
        scale = abs(value)
        if scale < 1.0:
            scale = 1.0
        if abs(nxt) <= tol * scale:
            bound = series_tail_bound(float(-m), 1, A, u, sa, p)
            if bound <= tol * scale:
                if _EPS * sum_abs <= tol * scale:
                    status = STATUS_CONVERGED
                break
        if added >= max_terms:
            bound = series_tail_bound(float(-m), 1, A, u, sa, p)
            break
    floor = _EPS * sum_abs
    if floor > bound:
        bound = floor
    return total + comp, added, bound, status


def hyp2f1_series(a: float, b: float, c: float, x: float, tol: float,
                  max_terms: int):
    """Gauss series for 2F1(a,b;c;x).

    Returns ``(value, terms_used, status)``.  Terminating cases (a or b a
    non-positive integer) are summed exactly for any x; otherwise |x| < 1 is
    required.  A denominator pole reached before termination reports
    STATUS_PARAM_POLE.
    """
    ka = nonpos_int_index(a)
    kb = nonpos_int_index(b)
    kterm = -1
    if ka >= 0:
        kterm = ka
    if kb >= 0 and (kterm < 0 or kb < kterm):
        kterm = kb
    kc = nonpos_int_index(c)
    if kc >= 0 and not (0 <= kterm <= kc):
        return math.nan, 0, STATUS_PARAM_POLE
    ax = abs(x)
    if kterm < 0 and ax >= 1.0:
        return math.nan, 0, STATUS_ARG_OUT
    total = 0.0
    comp = 0.0
    term = 1.0
    idx = 0
    small_streak = 0
    status = STATUS_TRUNCATED
    while idx < max_terms:
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        cur = idx
        idx += 1
        value = total + comp
        if not math.isfinite(value) or abs(term) > _HUGE:
            status = STATUS_DIVERGED
            break
        if kterm >= 0 and cur >= kterm:
            status = STATUS_CONVERGED
            break
        term = term * (a + cur) * (b + cur) / ((c + cur) * (1.0 + cur)) * x
        scale = abs(value)
        if scale < 1.0:
            scale = 1.0
        if kterm < 0:
            if abs(term) <= 0.5 * tol * scale * (1.0 - ax):
                small_streak += 1
                if small_streak >= 2:
                    status = STATUS_CONVERGED
                    break
            else:
                small_streak = 0
    return total + comp, idx, status
