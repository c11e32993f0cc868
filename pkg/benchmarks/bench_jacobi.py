"""Compare the compiled Jacobi kernel with the pure-Python fallback.

    python3 benchmarks/bench_jacobi.py [--sizes 10 20 40] [--repeat 3]
"""
import argparse
import time

import numpy as np

from randic_incidence._kernels import jacobi_py

try:
    from randic_incidence._kernels import _jacobi
except ImportError:
    _jacobi = None


def best_of(fn, a, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(a)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'n':>5} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for n in args.sizes:
        a = rng.standard_normal((n, n))
        a = np.triu(a) + np.triu(a, 1).T
        py = best_of(jacobi_py.jacobi_eigh, a, args.repeat)
        if _jacobi is None:
            print(f"{n:>5} {py:>12.4f} {'n/a':>13} {'':>8}")
            continue
        c = best_of(_jacobi.jacobi_eigh, a, args.repeat)
        print(f"{n:>5} {py:>12.4f} {c:>13.5f} {py / c:>7.0f}x")


if __name__ == "__main__":
    main()
