# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``: same names, same arguments, same branches.

Any change here must land in the pure-Python module too; the backend test
suite cross-checks the two implementations on a shared grid.
"""

from libc.math cimport (
    INFINITY,
    NAN,
    exp,
    expm1,
    fabs,
    floor,
    isfinite,
    lgamma,
    log,
    pow,
    sin,
)

cdef double PI = 3.141592653589793
cdef double SQRT_TWO_PI = 2.5066282746310002

cdef double[9] _LANCZOS
_LANCZOS[0] = 0.99999999999980993
_LANCZOS[1] = 676.5203681218851
_LANCZOS[2] = -1259.1392167224028
_LANCZOS[3] = 771.32342877765313
_LANCZOS[4] = -176.61502916214059
_LANCZOS[5] = 12.507343278686905
_LANCZOS[6] = -0.13857109526572012
_LANCZOS[7] = 9.9843695780195716e-6
_LANCZOS[8] = 1.5056327351493116e-7

STATUS_CONVERGED = 0
STATUS_TRUNCATED = 1
STATUS_DIVERGED = 2
STATUS_PARAM_POLE = 3
STATUS_ARG_OUT = 4

cdef double _INT_TOL = 1e-12
cdef double _HUGE = 1e290
cdef double _EPS = 2.220446049250313e-16


cpdef double sinpi(double x):
    """sin(pi*x) with argument reduction done on x, accurate near integers."""
    cdef double n = floor(x + 0.5)
    cdef double s = sin(PI * (x - n))
    if (<long long>n) & 1:
        return -s
    return s


cpdef long nonpos_int_index(double x):
    """Return n >= 0 when x is within 1e-12 of -n, else -1."""
    if x > 0.5:
        return -1
    cdef double n = floor(x + 0.5)
    if fabs(x - n) <= _INT_TOL:
        return <long>(-n)
    return -1


cdef double _gamma_positive(double z):
    # z >= 0.5 only
    if z > 180.0:
        return INFINITY
    z -= 1.0
    cdef double acc = _LANCZOS[0]
    cdef int i
    for i in range(1, 9):
        acc += _LANCZOS[i] / (z + i)
    cdef double t = z + 7.5
    return SQRT_TWO_PI * pow(t, z + 0.5) * exp(-t) * acc


cpdef double gamma_value(double z):
    """Gamma for non-pole arguments; reflection below 0.5."""
    if z < 0.5:
        return PI / (sinpi(z) * _gamma_positive(1.0 - z))
    return _gamma_positive(z)


cpdef double gamma_sign(double z):
    """Sign of Gamma at a non-pole argument."""
    if z > 0.0:
        return 1.0
    return 1.0 if sinpi(z) > 0.0 else -1.0


cpdef double series_tail_bound(double beta, int beta_is_int, double A,
                               double u, double sa, long p):
    """Upper bound on the tail after the first p series indices."""
    cdef double abs_a, abs_td, w, mm, omega, ln_b, ln_ratio
    cdef double nu, e1, e2, big, small, brace
    cdef long m
    if u <= 0.0:
        return 0.0
    abs_a = fabs(A)
    abs_td = fabs(A + u)
    if sa + p - 1.0 < 0.0:
        if sa <= -1.0 + _INT_TOL:
            return INFINITY
        w = pow(abs_a, beta - 1.0)
        e1 = pow(abs_td, beta - 1.0)
        if e1 > w:
            w = e1
        return fabs(beta) * w * pow(u, 1.0 + sa) / exp(lgamma(2.0 + sa))
    if beta_is_int:
        m = <long>floor(beta + 0.5)
        if m >= 0:
            if p >= m + 1:
                return 0.0
            ln_ratio = lgamma(m + 1.0) - lgamma(m - p + 2.0)
        else:
            mm = <double>(-m)
            omega = abs_td if A < 0.0 else abs_a
            ln_b = (lgamma(mm + p) - lgamma(mm) - lgamma(sa + p)
                    + sa * log(u) + p * (log(u) - log(omega))
                    - mm * log(omega))
            return exp(ln_b)
    else:
        if p <= beta + 1.0:
            ln_ratio = lgamma(beta + 1.0) - lgamma(beta - p + 2.0)
        else:
            ln_ratio = (lgamma(beta + 1.0) + log(fabs(sinpi(beta)))
                        - log(PI) + lgamma(p - beta - 1.0))
    nu = beta - p + 1.0
    e1 = nu * log(abs_td)
    e2 = nu * log(abs_a)
    if e1 >= e2:
        big = e1
        small = e2
    else:
        big = e2
        small = e1
    brace = -expm1(small - big)
    return exp(ln_ratio - lgamma(sa + p) + (sa + p - 1.0) * log(u) + big) * brace


cdef long _start_index(double sa):
    cdef long n = nonpos_int_index(sa + 1.0)
    if n < 0:
        return 0
    return n + 1


def power_series(double front, double beta, double A, double u, double sa,
                 int beta_is_int, double tol, long max_terms):
    """Displaced power-operator series; see the pure-Python twin for the contract."""
    cdef double coef, term, total, comp, sum_abs, t, value, bound, scale, floor_
    cdef long k0, k, added, j, p
    cdef int status
    if u == 0.0 and sa > 0.0:
        return 0.0, 0, 0.0, 0
    k0 = _start_index(sa)
    coef = front
    for j in range(k0):
        coef *= (beta - j) / A
    term = coef * pow(u, sa + k0) / gamma_value(sa + k0 + 1.0)
    total = 0.0
    comp = 0.0
    sum_abs = 0.0
    k = k0
    added = 0
    bound = INFINITY
    status = 1
    while True:
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        sum_abs += fabs(term)
        added += 1
        p = k + 1
        value = total + comp
        if not isfinite(value) or fabs(term) > _HUGE:
            bound = INFINITY
            status = 2
            break
        term = term * (beta - k) * u / ((sa + k + 1.0) * A)
        k += 1
        scale = fabs(value)
        if scale < 1.0:
            scale = 1.0
        if fabs(term) <= tol * scale:
            bound = series_tail_bound(beta, beta_is_int, A, u, sa, p)
            if bound <= tol * scale:
                if _EPS * sum_abs <= tol * scale:
                    status = 0
                break
        if added >= max_terms:
            bound = series_tail_bound(beta, beta_is_int, A, u, sa, p)
            break
    floor_ = _EPS * sum_abs
    if floor_ > bound:
        bound = floor_
    return total + comp, added, bound, status


def power_series_partial(double front, double beta, double A, double u,
                         double sa, long p):
    """Exact partial sum over series indices 0..p-1."""
    cdef double coef, term, total, comp, t
    cdef long k0, k, j
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
    term = coef * pow(u, sa + k0) / gamma_value(sa + k0 + 1.0)
    total = 0.0
    comp = 0.0
    for k in range(k0, p):
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        term = term * (beta - k) * u / ((sa + k + 1.0) * A)
    return total + comp


def neg_int_series(long m, double A, double u, double sa, double tol,
                   long max_terms):
    """Alternating form for beta = -m; see the pure-Python twin."""
    cdef double r, s, term, total, comp, sum_abs, t, value, bound, scale, nxt, floor_
    cdef long k0, k, added, j, p
    cdef int status
    if u == 0.0 and sa > 0.0:
        return 0.0, 0, 0.0, 0
    k0 = _start_index(sa)
    r = 1.0
    for j in range(k0):
        r *= (m + j)
    r /= gamma_value(sa + k0 + 1.0)
    s = pow(A, <double>(-(m + k0))) * pow(u, sa + k0)
    if k0 & 1:
        s = -s
    total = 0.0
    comp = 0.0
    sum_abs = 0.0
    k = k0
    added = 0
    bound = INFINITY
    status = 1
    while True:
        term = r * s
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        sum_abs += fabs(term)
        added += 1
        p = k + 1
        value = total + comp
        if not isfinite(value) or fabs(term) > _HUGE:
            bound = INFINITY
            status = 2
            break
        r = r * (m + k) / (sa + k + 1.0)
        s = s * (-u) / A
        k += 1
        nxt = r * s
        scale = fabs(value)
        if scale < 1.0:
            scale = 1.0
        if fabs(nxt) <= tol * scale:
            bound = series_tail_bound(<double>(-m), 1, A, u, sa, p)
            if bound <= tol * scale:
                if _EPS * sum_abs <= tol * scale:
                    status = 0
                break
        if added >= max_terms:
            bound = series_tail_bound(<double>(-m), 1, A, u, sa, p)
            break
    floor_ = _EPS * sum_abs
    if floor_ > bound:
        bound = floor_
    return total + comp, added, bound, status


def hyp2f1_series(double a, double b, double c, double x, double tol,
                  long max_terms):
    """Gauss series for 2F1(a,b;c;x); see the pure-Python twin."""
    cdef long ka, kb, kterm, kc, idx, cur, small_streak
    cdef double ax, total, comp, term, t, value, scale
    cdef int status
    ka = nonpos_int_index(a)
    kb = nonpos_int_index(b)
    kterm = -1
    if ka >= 0:
        kterm = ka
    if kb >= 0 and (kterm < 0 or kb < kterm):
        kterm = kb
    kc = nonpos_int_index(c)
    if kc >= 0 and not (0 <= kterm <= kc):
        return NAN, 0, 3
    ax = fabs(x)
    if kterm < 0 and ax >= 1.0:
        return NAN, 0, 4
    total = 0.0
    comp = 0.0
    term = 1.0
    idx = 0
    small_streak = 0
    status = 1
    while idx < max_terms:
        t = total + term
        if fabs(total) >= fabs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        cur = idx
        idx += 1
        value = total + comp
        if not isfinite(value) or fabs(term) > _HUGE:
            status = 2
            break
        if kterm >= 0 and cur >= kterm:
            status = 0
            break
        term = term * (a + cur) * (b + cur) / ((c + cur) * (1.0 + cur)) * x
        scale = fabs(value)
        if scale < 1.0:
            scale = 1.0
        if kterm < 0:
            if fabs(term) <= 0.5 * tol * scale * (1.0 - ax):
                small_streak += 1
                if small_streak >= 2:
                    status = 0
                    break
            else:
                small_streak = 0
    return total + comp, idx, status
