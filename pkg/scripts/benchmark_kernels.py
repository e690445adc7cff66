#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Times the two hot kernels (reduced row echelon form and matrix multiply)
on random rational matrices of increasing size and prints a comparison
table.  Both backends are exercised through the same module-level API, so
the numbers reflect exactly what the library uses at runtime.
"""

import argparse
import statistics
import time
from fractions import Fraction

from fredpairs._kernels import _pure
from fredpairs.generators import SplitMix64

try:
    from fredpairs._kernels import _speedups
except ImportError:
    _speedups = None


def random_rows(rng, rows, cols, bound):
    return [
        [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(cols)]
        for _ in range(rows)
    ]


def time_call(fn, args, repeats):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--bound", type=int, default=9, help="numerator/denominator bound")
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled backend unavailable; only the pure backend will run")

    header = f"{'kernel':<8} {'size':>6} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        rng = SplitMix64(args.seed + n)
        grid = random_rows(rng, n, n, args.bound)
        a = random_rows(rng, n, n, args.bound)
        b = random_rows(rng, n, n, args.bound)

        jobs = [
            ("rref", "rref_rows", ([list(r) for r in grid], n)),
            ("matmul", "mat_mul", (a, b, n, n, n)),
        ]
        for label, name, call_args in jobs:
            pure_t = time_call(getattr(_pure, name), call_args, args.repeats)
            if _speedups is not None:
                fast_t = time_call(getattr(_speedups, name), call_args, args.repeats)
                ratio = pure_t / fast_t if fast_t else float("inf")
                print(
                    f"{label:<8} {n:>6} {pure_t * 1e3:>12.2f} "
                    f"{fast_t * 1e3:>14.2f} {ratio:>7.1f}x"
                )
            else:
                print(f"{label:<8} {n:>6} {pure_t * 1e3:>12.2f} {'-':>14} {'-':>8}")


if __name__ == "__main__":
    main()
