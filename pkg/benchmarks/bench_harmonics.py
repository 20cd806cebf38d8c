"""Timing comparison of the numba and pure-numpy harmonic kernels.

The basis build dominates synthesis, projection and rotation resampling, so
it is the quantity benchmarked here, together with an end-to-end rotation
(resample + re-project) through each backend.

Run:
    python benchmarks/bench_harmonics.py
    RP2QUANT_NO_NUMBA=1 rp2quant all        # full suite on the fallback path
"""

import time

import numpy as np

from rp2quant._kernels import HAVE_NUMBA, ylm_basis_numba, ylm_basis_numpy

REPEATS = 5
CASES = [
    (162, 8),        # default verification grid
    (2178, 16),
    (4422, 32),      # largest supported band limit
    (100_000, 16),
]


def best_of(fn, *args):
    times = []
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    rng = np.random.default_rng(0)
    print(f"{'points':>8} {'lmax':>5} {'numpy':>12} {'numba':>12} {'speedup':>8}")
    for n, lmax in CASES:
        pts = rng.normal(size=(n, 3))
        pts /= np.linalg.norm(pts, axis=1)[:, None]
        t_np = best_of(ylm_basis_numpy, pts, lmax)
        if HAVE_NUMBA:
            ylm_basis_numba(pts, lmax)          # trigger compilation outside timing
            t_nb = best_of(ylm_basis_numba, pts, lmax)
            print(f"{n:>8} {lmax:>5} {t_np*1e3:>10.2f}ms {t_nb*1e3:>10.2f}ms "
                  f"{t_np/t_nb:>7.1f}x")
        else:
            print(f"{n:>8} {lmax:>5} {t_np*1e3:>10.2f}ms {'n/a':>12} {'':>8}")

    # end-to-end rotation through the public API on both paths
    from rp2quant.groups import su2_from_axis_angle
    from rp2quant.harmonics import random_coeffs, rotate_coeffs
    from rp2quant.manifold import build_quadrature

    grid = build_quadrature(16)
    a = random_coeffs(16, "full", rng)
    g = su2_from_axis_angle(0.7, (0.0, 0.0, 1.0))
    t = best_of(lambda: rotate_coeffs(g, a, grid))
    backend = "numba" if HAVE_NUMBA else "numpy"
    print(f"\nrotate_coeffs at lmax 16 ({backend} default path): {t*1e3:.2f} ms")


if __name__ == "__main__":
    main()
