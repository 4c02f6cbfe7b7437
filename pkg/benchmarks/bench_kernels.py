"""Benchmark the jitted kernels against their pure-numpy fallbacks.

Runs each hot kernel on realistic shapes and prints a timing table.
Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from vxs import _kernels_numpy

try:
    from vxs import _kernels_numba
except ImportError:
    _kernels_numba = None


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases():
    rng = np.random.default_rng(7)

    n_circle = 1 << 16
    cos_t = np.cos(2.0 * np.pi * rng.random(n_circle))
    yield ("abs_sq_pow_mean (65536 nodes)",
           lambda mod: mod.abs_sq_pow_mean(cos_t, 0.999, -2.3))

    n = 200_000
    w = rng.random(n) + 1.0e-3
    logf = rng.normal(0.0, 2.0, n)
    p = rng.uniform(1.5, 4.0, n)
    offsets = np.asarray([0, n // 3, n], dtype=np.int64)
    out = np.empty(2, dtype=np.float64)
    yield ("power_sums (200k samples, 2 groups)",
           lambda mod: mod.power_sums(w, logf, p, 0.25, offsets, out))

    coeffs = np.ascontiguousarray(rng.normal(size=64) + 1j * rng.normal(size=64))
    z = np.ascontiguousarray((rng.random(50_000) * 0.99) *
                             np.exp(2j * np.pi * rng.random(50_000)))
    hout = np.empty(z.shape, dtype=np.complex128)
    yield ("horner (degree 63, 50k points)",
           lambda mod: mod.horner(coeffs, z, hout))

    zeros = np.ascontiguousarray((rng.random(24) * 0.9) *
                                 np.exp(2j * np.pi * rng.random(24)))
    bout = np.empty(z.shape, dtype=np.complex128)
    yield ("blaschke_eval (24 zeros, 50k points)",
           lambda mod: mod.blaschke_eval(zeros, z, bout))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if _kernels_numba is None:
        print("numba backend unavailable; timing numpy only")
    rows = []
    for name, call in _cases():
        t_np = _time(lambda: call(_kernels_numpy), args.repeat)
        if _kernels_numba is not None:
            call(_kernels_numba)  # JIT compile outside the timed region
            t_nb = _time(lambda: call(_kernels_numba), args.repeat)
            rows.append((name, t_np, t_nb, t_np / t_nb))
        else:
            rows.append((name, t_np, None, None))

    width = max(len(r[0]) for r in rows)
    header = "%-*s  %12s  %12s  %8s" % (width, "kernel", "numpy [ms]",
                                        "numba [ms]", "speedup")
    print(header)
    print("-" * len(header))
    for name, t_np, t_nb, sp in rows:
        if t_nb is None:
            print("%-*s  %12.3f  %12s  %8s" % (width, name, t_np * 1e3,
                                               "-", "-"))
        else:
            print("%-*s  %12.3f  %12.3f  %7.2fx" % (width, name, t_np * 1e3,
                                                    t_nb * 1e3, sp))


if __name__ == "__main__":
    main()
