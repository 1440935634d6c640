#!/usr/bin/env python3
"""Time the fast Hankel apply against the literal multi-index sum.

Usage:
    python scripts/bench_apply.py --m 3 --dims 10,100,1000,10000
"""

import argparse
import time

import numpy as np

from hilbert_tensors import HilbertTensor
from hilbert_tensors.core import max_elements_budget


def timed(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--dims", default="10,100,1000,10000")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    budget = max_elements_budget()
    print(f"{'n':>8} {'fast (s)':>12} {'naive (s)':>12} {'speedup':>10} {'delta':>10}")
    for n in (int(s) for s in args.dims.split(",")):
        t = HilbertTensor(args.m, n)
        x = np.cos(np.arange(1, n + 1))
        t_fast = timed(t.apply_fast, x, repeats=args.repeats)
        if n**args.m <= budget:
            t_naive = timed(t.apply_naive, x, repeats=1)
            fast = t.apply_fast(x).values
            naive = np.asarray(t.apply_naive(x))
            delta = float(np.max(np.abs(fast - naive)) / (1.0 + np.max(np.abs(naive))))
            print(f"{n:>8} {t_fast:>12.3e} {t_naive:>12.3e} "
                  f"{t_naive / t_fast:>10.1f} {delta:>10.2e}")
        else:
            print(f"{n:>8} {t_fast:>12.3e} {'(skipped)':>12} {'-':>10} {'-':>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
