#!/usr/bin/env python3
"""Benchmark the compiled integer-matrix kernels against the pure-Python
reference.

Runs each kernel on identical random inputs with both backends and prints
per-operation timings plus the speedup ratio.  Results are also
cross-checked for equality, so a run doubles as a consistency test.

    python3 benchmarks/bench_kernels.py [--size N] [--reps R] [--seed S]
"""

import argparse
import random
import time

from gcover import _purekernels

try:
    from gcover import _speedups
except ImportError:  # pragma: no cover
    _speedups = None


def _random_matrix(rng, m, n, bound):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)]


def _time(fn, args, reps):
    best = None
    result = None
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench(size, reps, seed):
    rng = random.Random(seed)
    A = _random_matrix(rng, size, size, 99)
    B = _random_matrix(rng, size, size, 99)
    jobs = [
        ("imat_mul", (A, B)),
        ("imat_rref", (A,)),
        ("imat_det", (A,)),
    ]
    backends = [("pure", _purekernels)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))

    print(f"square matrices: {size} x {size}, entries in [-99, 99], "
          f"best of {reps} runs")
    header = f"{'kernel':<12}" + "".join(f"{name:>12}" for name, _ in backends)
    if _speedups is not None:
        header += f"{'speedup':>10}"
    print(header)
    for op, args in jobs:
        times = []
        results = []
        for _, mod in backends:
            dt, res = _time(getattr(mod, op), args, reps)
            times.append(dt)
            results.append(res)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"backend results differ for {op}")
        line = f"{op:<12}" + "".join(f"{dt * 1e3:>10.2f}ms" for dt in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)
    if _speedups is None:
        print("note: compiled extension not available; showing pure only")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=60,
                        help="matrix dimension (default 60)")
    parser.add_argument("--reps", type=int, default=3,
                        help="repetitions per measurement (default 3)")
    parser.add_argument("--seed", type=int, default=20260814,
                        help="RNG seed (default 20260814)")
    args = parser.parse_args()
    bench(args.size, args.reps, args.seed)


if __name__ == "__main__":
    main()
