#!/usr/bin/env python3
"""Benchmark the two mul_reduce kernels against each other.

The kernel multiplies two coefficient vectors and reduces modulo the
cyclotomic polynomial; it is the hot loop under every CycNum product.
This script times the pure-Python loop and the compiled extension on
identical inputs at the conductors the package actually uses (60 for
q=5, 168 for q=7, 1092 for q=13) and prints the speedup.

    python3 benchmarks/bench_kernel.py [--repeats N] [--seed S]
"""
import argparse
import random
import time

from sl2q.cyclo import _high_rows, _rows_max
from sl2q._kernel import poly as pure

try:
    from sl2q._kernel import _poly_c as compiled
except ImportError:
    compiled = None


def _vectors(rng, phi, density, magnitude):
    def vec():
        out = [0] * phi
        for i in range(phi):
            if rng.random() < density:
                out[i] = rng.randint(1, magnitude) * rng.choice((1, -1))
        if not any(out):
            out[0] = 1
        return out
    return vec(), vec()


def _time(fn, xs, ys, rows, rmax, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(xs, ys, rows, rmax)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=20,
                    help="runs per case; the best time is reported (default 20)")
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'conductor':>9}  {'phi':>4}  {'density':>7}  "
          f"{'pure':>10}  {'compiled':>10}  {'speedup':>7}")
    cases = [(60, 0.2), (60, 1.0), (168, 0.2), (168, 1.0),
             (1092, 0.05), (1092, 0.2), (1092, 1.0)]
    for N, density in cases:
        rows = _high_rows(N)
        rmax = _rows_max(N)
        phi = len(rows[0]) if rows else 1
        # magnitudes modelled on cleared-denominator character values
        xs, ys = _vectors(rng, phi, density, 40)
        t_pure = _time(pure.mul_reduce, xs, ys, rows, rmax, args.repeats)
        if compiled is None:
            print(f"{N:>9}  {phi:>4}  {density:>7.2f}  {t_pure * 1e6:>8.1f}us"
                  f"  {'-':>10}  {'-':>7}")
            continue
        got = compiled.mul_reduce(xs, ys, rows, rmax)
        assert got == pure.mul_reduce(xs, ys, rows, rmax), "kernels disagree"
        t_c = _time(compiled.mul_reduce, xs, ys, rows, rmax, args.repeats)
        print(f"{N:>9}  {phi:>4}  {density:>7.2f}  {t_pure * 1e6:>8.1f}us"
              f"  {t_c * 1e6:>8.1f}us  {t_pure / t_c:>6.1f}x")
    if compiled is None:
        print("\ncompiled kernel not built; showing pure times only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
