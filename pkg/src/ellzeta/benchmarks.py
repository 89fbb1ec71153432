"""Benchmark the numba kernels against the pure-numpy fallback.

Run with ``python -m ellzeta.benchmarks [--repeat N]``.  Both backends are
imported directly, so the timings do not depend on ELLZETA_BACKEND; the
numba variants are warmed once before timing so compilation is excluded.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from .kernels import reference

try:
    from .kernels import jit
except ImportError:
    jit = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _cases():
    tau = 0.3 + 1.2j
    q = np.exp(2j * np.pi * tau)
    zs = (np.linspace(0.05, 0.95, 128) + 0.21j).astype(np.complex128)
    coeffs = np.arange(1, 2001, dtype=np.float64)
    return [
        ("zeta_series (128 pts, 2000 terms)",
         lambda m: m.zeta_series(zs, q, 2000)),
        ("wp_series (128 pts, 2000 terms)",
         lambda m: m.wp_series(zs, q, 2000)),
        ("wp_prime_series (128 pts, 2000 terms)",
         lambda m: m.wp_prime_series(zs, q, 2000)),
        ("power_series (2000 terms)",
         lambda m: m.power_series(q, coeffs)),
        ("delta_product (2000 terms)",
         lambda m: m.delta_product(q, 2000)),
        ("zeta_direct_sum (radius 200)",
         lambda m: m.zeta_direct_sum(0.25 + 0.1j, tau, 200)),
        ("wp_direct_sum (radius 200)",
         lambda m: m.wp_direct_sum(0.25 + 0.1j, tau, 200)),
        ("lattice_inv_power_sum (k=4, radius 200)",
         lambda m: m.lattice_inv_power_sum(tau, 4, 200)),
    ]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    cases = _cases()
    if jit is not None:
        for _, call in cases:  # warm-up: trigger compilation outside timing
            call(jit)

    width = max(len(name) for name, _ in cases)
    header = f"{'kernel':<{width}}  {'numpy':>10}  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in cases:
        t_np = _time(lambda: call(reference), args.repeat)
        if jit is not None:
            t_nb = _time(lambda: call(jit), args.repeat)
            print(f"{name:<{width}}  {t_np*1e3:>8.3f}ms  {t_nb*1e3:>8.3f}ms  "
                  f"{t_np/t_nb:>7.1f}x")
        else:
            print(f"{name:<{width}}  {t_np*1e3:>8.3f}ms  {'n/a':>10}  {'n/a':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
