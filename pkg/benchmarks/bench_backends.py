#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against the pure-Python fallback.

Times the three hot loops (displaced series, negative-integer series, 2F1
series, plus the scalar gamma core) over representative in-window workloads
and prints a per-call table with speedups.  Values are cross-checked between
backends while timing so a silent divergence cannot hide behind a speedup.

Run:  python3 benchmarks/bench_backends.py [repeats]
"""

from __future__ import annotations

import math
import sys
import time

from rlpower import _kernels_py

try:
    from rlpower import _kernels_cy
except ImportError:
    _kernels_cy = None


def _series_work(k):
    out = 0.0
    for alpha in (0.1, 0.3, 0.5, 0.7, 0.9):
        for beta in (-2.5, -0.5, 0.5, 1.5, 3.3):
            for frac in (0.3, 0.6, 0.9):
                u = 1.0 * frac
                out += k.power_series(1.0, beta, 1.0, u, alpha, 0, 1e-10, 10000)[0]
                out += k.power_series(1.0, beta, 1.0, u, -alpha, 0, 1e-10, 10000)[0]
    return out


def _neg_int_work(k):
    out = 0.0
    for alpha in (0.2, 0.5, 0.8):
        for m in (1, 2, 3):
            for frac in (0.4, 0.8):
                out += k.neg_int_series(m, 1.0, frac, alpha, 1e-10, 10000)[0]
    return out


def _hyp_work(k):
    out = 0.0
    for a in (0.3, 0.9):
        for b in (-1.7, 0.4, 2.2):
            for x in (-0.8, -0.3, 0.3, 0.8):
                out += k.hyp2f1_series(a, b, 1.4, x, 1e-14, 20000)[0]
    return out


def _gamma_work(k):
    out = 0.0
    for i in range(135):
        z = 0.113 + 0.37 * i  # never integral: keeps clear of the poles
        out += k.gamma_value(z) % 10.0
        out += k.gamma_value(-z)
    return out


WORKLOADS = [
    ("power series (J+D)", _series_work),
    ("neg-int series", _neg_int_work),
    ("2F1 series", _hyp_work),
    ("gamma core", _gamma_work),
]


def _time(fn, backend, repeats):
    best = math.inf
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn(backend)
        best = min(best, time.perf_counter() - start)
    return best, value


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    if _kernels_cy is None:
        print("compiled backend not built; run `python3 setup.py build_ext "
              "--inplace` first")
        return 1
    print(f"{'workload':<22} {'pure-python':>12} {'compiled':>12} {'speedup':>8}")
    for name, fn in WORKLOADS:
        t_py, v_py = _time(fn, _kernels_py, repeats)
        t_cy, v_cy = _time(fn, _kernels_cy, repeats)
        if not math.isclose(v_py, v_cy, rel_tol=1e-9):
            print(f"{name}: BACKEND MISMATCH {v_py!r} vs {v_cy!r}")
            return 1
        print(f"{name:<22} {t_py * 1e6:>10.1f}us {t_cy * 1e6:>10.1f}us "
              f"{t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
