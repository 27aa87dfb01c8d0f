"""Compare the numba and numpy kernel backends on representative workloads.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Numba
compile time is paid in a warm-up call and reported separately.
"""

import argparse
import time

import numpy as np

from karpelevic.kernels import _numba, _numpy
from karpelevic.matrices import random_stochastic


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(rng):
    # characteristic polynomials of random 6x6 stochastic matrices
    mats = random_stochastic(6, size=2000, rng=rng)
    cps = _numpy.faddeev_leverrier_batch(mats).astype(np.complex128)
    # boundary bisection over a dense angle grid on one type II sector
    taus = np.linspace(0.6 * np.pi, 2 * np.pi / 3, 20001)[1:-1] / 2 + np.pi
    return {
        "faddeev_leverrier_batch (2000 x 6x6)": lambda m: m.faddeev_leverrier_batch(mats),
        "durand_kerner_batch (2000 x deg 6)": lambda m: m.durand_kerner_batch(cps, 1e-13, 2000, 0.4),
        "durand_kerner (deg 24)": lambda m: m.durand_kerner(
            np.r_[-1.0, np.zeros(11), 0.5, np.zeros(11), 1.0].astype(np.complex128), 1e-13, 2000, 0.4),
        "bisect_boundary (20000 angles)": lambda m: m.bisect_boundary(
            taus, 6, 5, np.pi / 2, 1e-15, 1.0, 1e-13, 200),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':40s} {'numpy [s]':>11s} {'numba [s]':>11s} {'speedup':>8s} {'jit [s]':>8s}")
    for name, call in workloads(rng).items():
        t0 = time.perf_counter()
        call(_numba)
        jit = time.perf_counter() - t0
        t_np = _best(lambda: call(_numpy), args.repeat)
        t_nb = _best(lambda: call(_numba), args.repeat)
        print(f"{name:40s} {t_np:11.5f} {t_nb:11.5f} {t_np / t_nb:8.1f} {jit:8.2f}")


if __name__ == "__main__":
    main()
