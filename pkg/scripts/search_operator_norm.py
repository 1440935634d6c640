#!/usr/bin/env python3
"""Probe how close the truncated infinite-dimensional operator norms get
to pi/sqrt(6), and where the maximizer sits.

For T at p = 2 the first coordinate vector attains the constant in the
truncation limit; for F at p = 2(m-1) with m > 2 the series constant is
(pi^2/6)^(1/(2(m-1))), strictly below pi/sqrt(6).  This script reports the
measured values; it proves nothing.

Usage:
    python scripts/search_operator_norm.py --orders 2,3,4 --trials 400
"""

import argparse

from hilbert_tensors import PI_OVER_SQRT6, norm_search, operator_norm_constant


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", default="2,3,4")
    parser.add_argument("--trials", type=int, default=400)
    parser.add_argument("--support", type=int, default=16)
    parser.add_argument("--trunc", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"pi/sqrt(6) = {PI_OVER_SQRT6:.12f}")
    for m in (int(s) for s in args.orders.split(",")):
        for op, p in (("T", 2.0), ("F", 2.0 * (m - 1))):
            rep = norm_search(m, p, trials=args.trials, support=args.support,
                              out_len=args.trunc, seed=args.seed, operator=op)
            constant = operator_norm_constant(op, m, p)
            peak = max(range(len(rep.best_vector)), key=lambda i: abs(rep.best_vector[i]))
            print(
                f"m={m} {op} p={p:g}: best={rep.best_value:.10f} "
                f"(series constant {constant:.10f}, gap to pi/sqrt6 "
                f"{rep.gap_to_pi_sqrt6:.3e}) peak coordinate e_{peak + 1}, "
                f"tail<={rep.best_tail_bound:.1e}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
