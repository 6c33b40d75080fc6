"""Series engine: operation examples, truncation behavior, cross routes."""

from __future__ import annotations

import math

import pytest

import rlpower as rl
from rlpower import OperatorKind, SeriesStatus
from rlpower.errors import (
    BetaOutOfRange,
    EvalAtLowerLimit,
    SeriesNotConverged,
    WindowViolation,
)
from rlpower.series import (
    _remainder_bound_deriv,
    remainder_params,
    rlfi_partial_sum,
)

from conftest import rel_err

SQRT_PI = 1.7724538509055160273


def _win(pf, a, **kw):
    return rl.make_window(a, pf, **kw)


# --- integral series -------------------------------------------------------

def test_rlfi_displaced_hand_integrable_case():
    # beta=1, d=0, a=1, alpha=0.5, t=1.5: (3 sqrt(.5) - (2/3) .5^1.5)/sqrt(pi)
    pf = rl.power_function(0.0, rl.beta_int(1))
    res = rl.rlfi_series_displaced(pf, _win(pf, 1.0), 0.5, 1.5)
    hand = (3.0 * math.sqrt(0.5) - (2.0 / 3.0) * 0.5 ** 1.5) / SQRT_PI
    assert res.value == pytest.approx(hand, rel=1e-12)
    assert res.terms_used == 2          # exact two-term sum
    assert res.status is SeriesStatus.CONVERGED


def test_rlfi_at_lower_limit_is_zero():
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    res = rl.rlfi_series_displaced(pf, _win(pf, 1.0), 0.5, 1.0)
    assert res.value == 0.0
    assert res.terms_used >= 0


def test_rlfi_rational_matches_oracle():
    pf = rl.power_function(0.0, rl.beta_rational(1, 2))
    res = rl.rlfi_series_displaced(pf, _win(pf, 1.0), 0.5, 1.4)
    assert rel_err(res.value, rl.quad_rlfi(pf, 1.0, 0.5, 1.4)) <= 1e-8


def test_rlfi_above_bit_for_bit_equals_displaced():
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    above = rl.rlfi_series_above(pf, 1.0, 0.5, 1.3)
    displaced = rl.rlfi_series_displaced(pf, _win(pf, 1.0), 0.5, 1.3)
    assert above == displaced


def test_rlfi_above_log_case():
    pf = rl.power_function(0.0, rl.beta_int(-1))
    res = rl.rlfi_series_above(pf, 2.0, 1.0, 2.5)
    assert res.value == pytest.approx(math.log(1.25), rel=1e-9)


def test_rlfi_above_at_start_is_zero():
    pf = rl.power_function(0.0, rl.beta_real(2.2))
    assert rl.rlfi_series_above(pf, 1.0, 0.5, 1.0).value == 0.0


def test_window_violation_raised_before_compute():
    pf = rl.power_function(0.0, rl.beta_int(-2))
    win = _win(pf, 1.0)
    with pytest.raises(WindowViolation):
        rl.rlfi_series_displaced(pf, win, 0.5, 2.0)   # exact open boundary
    with pytest.raises(WindowViolation):
        rl.rlfd_series(pf, win, 0.5, 5.0)


def test_series_not_converged_carries_partial_result():
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    win = _win(pf, 1.0)
    with pytest.raises(SeriesNotConverged) as exc:
        rl.rlfi_series_displaced(pf, win, 0.5, 1.9, max_terms=5)
    res = exc.value.result
    assert res.terms_used == 5
    assert res.status is SeriesStatus.TRUNCATED
    assert res.remainder_bound > 0.0


def test_natural_termination_term_count():
    # integer beta >= 0: exactly m+1 terms; only the roundoff floor remains
    for m in (0, 1, 2, 5):
        pf = rl.power_function(0.0, rl.beta_int(m))
        res = rl.rlfi_series_displaced(pf, _win(pf, 1.0), 0.7, 1.6)
        assert res.terms_used == m + 1
        assert res.remainder_bound <= 1e-14


def test_polynomial_sum_examples():
    pf0 = rl.power_function(0.0, rl.beta_int(0))
    assert rl.rlfi_polynomial(pf0, 0.0, 0.5, 1.0) == pytest.approx(
        2.0 / SQRT_PI, rel=1e-13)
    pf1 = rl.power_function(0.0, rl.beta_int(1))
    assert rl.rlfi_polynomial(pf1, 0.0, 0.5, 1.0) == pytest.approx(
        0.75225277806367504, rel=1e-12)    # Gamma(2)/Gamma(2.5)
    pf2 = rl.power_function(0.0, rl.beta_int(2))
    assert rl.rlfi_polynomial(pf2, 0.0, 0.0, 1.7) == pytest.approx(1.7 ** 2, rel=1e-13)


def test_polynomial_centered_reduces_to_single_term():
    pf = rl.power_function(0.4, rl.beta_int(3))
    got = rl.rlfi_polynomial(pf, 0.4, 0.6, 2.0)
    want = rl.gamma_ratio(4.0, 4.6) * (2.0 - 0.4) ** 3.6
    assert got == pytest.approx(want, rel=1e-12)


def test_neg_integer_route_agrees_with_general():
    pf = rl.power_function(0.0, rl.beta_int(-2))
    win = _win(pf, 1.0)
    alt = rl.rlfi_neg_integer(pf, win, 0.5, 1.2)
    gen = rl.rlfi_series_displaced(pf, win, 0.5, 1.2)
    assert rel_err(alt.value, gen.value) <= 1e-12


def test_neg_integer_log_reduction():
    pf = rl.power_function(0.0, rl.beta_int(-1))
    res = rl.rlfi_neg_integer(pf, _win(pf, 2.0), 1.0, 2.5)
    assert res.value == pytest.approx(math.log(1.25), rel=1e-9)


def test_neg_integer_at_lower_limit():
    pf = rl.power_function(0.0, rl.beta_int(-2))
    assert rl.rlfi_neg_integer(pf, _win(pf, 1.0), 0.5, 1.0).value == 0.0
    with pytest.raises(EvalAtLowerLimit):
        rl.rlfd_neg_integer(2, pf, _win(pf, 1.0), 0.5, 1.0)


# --- derivative series -----------------------------------------------------

def test_rlfd_centered_linear():
    pf = rl.power_function(0.0, rl.beta_int(1))
    res = rl.rlfd_series(pf, _win(pf, 0.0), 0.5, 1.0)
    assert res.value == pytest.approx(2.0 / SQRT_PI, rel=1e-12)  # Gamma(2)/Gamma(1.5)


def test_rlfd_constant_is_not_zero():
    got = rl.rlfd_polynomial(0, 0.0, 0.0, 0.5, 1.0)
    assert got == pytest.approx(1.0 / SQRT_PI, rel=1e-12)


def test_rlfd_alpha_one_classical_derivative():
    pf = rl.power_function(0.0, rl.beta_int(2))
    res = rl.rlfd_series(pf, _win(pf, 1.0), 1.0, 1.2)
    assert res.value == pytest.approx(2.4, rel=1e-10)


def test_rlfd_neg_integer_alpha_one():
    pf = rl.power_function(0.0, rl.beta_int(-1))
    res = rl.rlfd_neg_integer(1, pf, _win(pf, 2.0), 1.0, 2.5)
    assert res.value == pytest.approx(-0.16, rel=1e-9)


def test_rlfd_polynomial_example():
    assert rl.rlfd_polynomial(1, 0.0, 0.0, 0.5, 4.0) == pytest.approx(
        2.0 * math.sqrt(4.0 / math.pi), rel=1e-12)


def test_rlfd_polynomial_constant_alpha_one_is_zero():
    assert rl.rlfd_polynomial(0, 0.0, 0.0, 1.0, 2.3) == 0.0


def test_rlfd_polynomial_identity_alpha_zero():
    assert rl.rlfd_polynomial(3, 0.5, 2.0, 0.0, 3.1) == pytest.approx(
        (3.1 - 0.5) ** 3, rel=1e-12)


def test_rlfd_at_lower_limit_raises():
    pf = rl.power_function(0.0, rl.beta_rational(1, 2))
    with pytest.raises(EvalAtLowerLimit):
        rl.rlfd_series(pf, _win(pf, 1.0), 0.5, 1.0)


# --- closed centered forms -------------------------------------------------

def test_closed_centered_integral():
    got = rl.closed_centered(OperatorKind.INTEGRAL, 1.0, 0.0, 0.5, 1.0)
    assert got == pytest.approx(0.75225277806367504, rel=1e-12)


def test_closed_centered_derivative():
    got = rl.closed_centered(OperatorKind.DERIVATIVE, 0.5, 0.0, 0.5, 1.0)
    assert got == pytest.approx(0.88622692545275801, rel=1e-12)  # Gamma(1.5)


def test_closed_centered_identity_at_alpha_zero():
    got = rl.closed_centered(OperatorKind.INTEGRAL, 0.7, 0.0, 0.0, 1.9)
    assert got == pytest.approx(1.9 ** 0.7, rel=1e-13)


def test_closed_centered_beta_out_of_range():
    with pytest.raises(BetaOutOfRange):
        rl.closed_centered(OperatorKind.INTEGRAL, -1.0, 0.0, 0.5, 1.0)
    with pytest.raises(BetaOutOfRange):
        rl.closed_centered(OperatorKind.INTEGRAL, -2.5, 0.0, 0.5, 1.0)


def test_closed_centered_derivative_kills_power_alpha_minus_one():
    # D^alpha (t-d)^(alpha-1) = 0 through the gamma pole
    assert rl.closed_centered(OperatorKind.DERIVATIVE, -0.5, 0.0, 0.5, 2.0) == 0.0


# --- remainder machinery ---------------------------------------------------

def test_remainder_bound_zero_at_lower_limit():
    pf = rl.power_function(0.0, rl.beta_int(-2))
    win = _win(pf, 1.0)
    for p in (1, 3, 10):
        assert rl.remainder_bound(pf, win, 0.5, 1.0, p) == 0.0


def test_remainder_bound_geometric_ratio_above():
    # above the shift the sound geometric factor is |t-a|/|a-d|
    pf = rl.power_function(0.0, rl.beta_int(-2))
    win = _win(pf, 1.0)
    b40 = rl.remainder_bound(pf, win, 0.5, 1.2, 40)
    b41 = rl.remainder_bound(pf, win, 0.5, 1.2, 41)
    assert b41 / b40 == pytest.approx(0.2, rel=0.1)


def test_remainder_bound_geometric_ratio_below():
    # below the shift the factor is |t-a|/|t-d|
    pf = rl.power_function(1.0, rl.beta_int(-2))
    win = _win(pf, 0.0)
    t = 0.3
    b40 = rl.remainder_bound(pf, win, 0.5, t, 40)
    b41 = rl.remainder_bound(pf, win, 0.5, t, 41)
    assert b41 / b40 == pytest.approx(0.3 / 0.7, rel=0.1)


def test_remainder_bound_monotone_past_crossover():
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    win = _win(pf, 1.0)
    bounds = [rl.remainder_bound(pf, win, 0.5, 1.6, p) for p in range(3, 40)]
    assert all(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:]))


def test_remainder_bound_dominates_true_tail():
    pf = rl.power_function(0.0, rl.beta_rational(1, 2))
    win = _win(pf, 1.0)
    t = 1.8
    exact = rl.quad_rlfi(pf, 1.0, 0.5, t)
    for p in range(1, 30):
        err = abs(exact - rlfi_partial_sum(pf, win, 0.5, t, p))
        assert err <= rl.remainder_bound(pf, win, 0.5, t, p)


def test_remainder_bound_deriv_dominates_tail():
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    win = _win(pf, 1.0)
    t = 1.8
    converged = rl.rlfd_series(pf, win, 0.5, t, tol=1e-13).value
    from rlpower.series import rlfd_partial_sum
    for p in range(1, 25):
        err = abs(converged - rlfd_partial_sum(pf, win, 0.5, t, p))
        assert err <= _remainder_bound_deriv(pf, win, 0.5, t, p) + 1e-12


def test_remainder_params_positive_inside_window():
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    win = _win(pf, 1.0)
    rp = remainder_params(pf, win, 0.5, 1.5)
    assert rp.gamma_rate > 0.0
    assert rp.eta_rate > 0.0
    assert rp.bound_const > 0.0


def test_term_ratio_tends_to_window_ratio():
    # |term_{k+1}/term_k| -> |(t-a)/(a-d)| inside the window
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    win = _win(pf, 1.0)
    t = 1.6
    p40 = rlfi_partial_sum(pf, win, 0.5, t, 41)
    p39 = rlfi_partial_sum(pf, win, 0.5, t, 40)
    p38 = rlfi_partial_sum(pf, win, 0.5, t, 39)
    ratio = (p40 - p39) / (p39 - p38)
    assert abs(ratio) == pytest.approx(0.6, rel=0.05)


def test_recurrence_matches_fresh_gamma_coefficients():
    # first 20 terms from the recurrence against direct gamma-ratio values
    pf = rl.power_function(0.0, rl.beta_real(-1.5))
    win = _win(pf, 1.0)
    alpha, t = 0.5, 1.7
    b = rl.beta_value(pf.beta)
    prev = 0.0
    for p in range(1, 21):
        term = rlfi_partial_sum(pf, win, alpha, t, p) - prev
        prev = rlfi_partial_sum(pf, win, alpha, t, p)
        direct = (rl.gamma_ratio(b + 1.0, b - (p - 1) + 1.0)
                  / float(rl.gamma(alpha + (p - 1) + 1.0))
                  * (1.0) ** (b - (p - 1)) * (t - 1.0) ** (alpha + p - 1))
        assert term == pytest.approx(direct, rel=1e-10, abs=1e-250)


# --- taylor route ----------------------------------------------------------

def test_taylor_route_matches_displaced_series():
    pf = rl.power_function(0.0, rl.beta_real(math.pi))
    tay = rl.taylor_route(pf, 1.0, 0.3, 1.3)
    ser = rl.rlfi_series_displaced(pf, _win(pf, 1.0), 0.3, 1.3)
    assert rel_err(tay.value, ser.value) <= 1e-10


def test_taylor_route_alpha_one_antiderivative():
    pf = rl.power_function(0.0, rl.beta_rational(1, 2))
    tay = rl.taylor_route(pf, 1.0, 1.0, 1.4)
    want = (1.4 ** 1.5 - 1.0) / 1.5
    assert tay.value == pytest.approx(want, rel=1e-9)


def test_taylor_route_alpha_zero_is_taylor_sum():
    pf = rl.power_function(0.0, rl.beta_real(-0.7))
    tay = rl.taylor_route(pf, 1.0, 0.0, 1.35)
    assert tay.value == pytest.approx(1.35 ** -0.7, rel=1e-9)


def test_roundoff_floor_reported_honestly():
    # steep exponent near the window edge: alternating terms grow ~3e7 above
    # the result, so double precision cannot reach 1e-10 and must say so
    pf = rl.power_function(-3.097620834595584, rl.beta_int(-9))
    win = _win(pf, -2.5142743197150135)
    alpha, t = 0.05, -1.9757011216363423
    oracle = rl.quad_rlfi(pf, win.a, alpha, t)
    with pytest.raises(SeriesNotConverged) as exc:
        rl.rlfi_series_displaced(pf, win, alpha, t)
    res = exc.value.result
    assert abs(res.value - oracle) <= res.remainder_bound
    # a tolerance above the roundoff floor converges, with an honest bound
    loose = rl.rlfi_series_displaced(pf, win, alpha, t, tol=1e-3)
    assert loose.status is SeriesStatus.CONVERGED
    assert abs(loose.value - oracle) <= loose.remainder_bound
    assert loose.remainder_bound <= 1e-3 * max(1.0, abs(loose.value))


def test_route_equivalence_pairwise():
    # series, taylor, neg-int alternate and (centered polynomial) closed form
    pf = rl.power_function(0.0, rl.beta_int(-2))
    win = _win(pf, 1.0)
    alpha, t = 0.6, 1.5
    values = [
        rl.rlfi_series_displaced(pf, win, alpha, t).value,
        rl.taylor_route(pf, 1.0, alpha, t).value,
        rl.rlfi_neg_integer(pf, win, alpha, t).value,
        rl.rlfi_hyp_form(pf, win, alpha, t),
    ]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            assert rel_err(values[i], values[j]) <= 1e-8

    # centered polynomial: finite sum against the closed gamma form
    pfm = rl.power_function(0.5, rl.beta_int(3))
    poly = rl.rlfi_polynomial(pfm, 0.5, alpha, 2.0)
    closed = rl.closed_centered(OperatorKind.INTEGRAL, 3.0, 0.5, alpha, 2.0)
    assert rel_err(poly, closed) <= 1e-12


# --- operator spec ---------------------------------------------------------

def test_operator_spec_validates_alpha():
    with pytest.raises(ValueError):
        rl.OperatorSpec(OperatorKind.INTEGRAL, 1.5)
    spec = rl.OperatorSpec(OperatorKind.DERIVATIVE, 0.5, rl.Route.SERIES)
    assert spec.alpha == 0.5
