"""Re-run the bounded searches behind the hard-coded Mordell and Ramanujan-Nagell sets.

    python scripts/verify_searches.py --mordell-bound 1000000 --t-max 200
"""

import argparse
import math
import time

from oplus.classify import (
    MORDELL_K1_SOLUTIONS,
    RAMANUJAN_NAGELL_SOLUTIONS,
    mordell_search,
    ramanujan_nagell_search,
)
from oplus.pell import chakravala


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mordell-bound", type=int, default=10**6)
    parser.add_argument("--t-max", type=int, default=200)
    parser.add_argument("--pell-max", type=int, default=200)
    args = parser.parse_args()

    res, dt = timed(mordell_search, 1, args.mordell_bound)
    ok = res.solutions == list(MORDELL_K1_SOLUTIONS)
    print(f"y^2 = x^3 + 1, |x| <= {args.mordell_bound}: {res.solutions} [{'ok' if ok else 'MISMATCH'}] {dt:.2f}s")

    sols, dt = timed(ramanujan_nagell_search, args.t_max)
    ok = sols == list(RAMANUJAN_NAGELL_SOLUTIONS)
    print(f"n^2 + 7 = 2^t, t <= {args.t_max}: {sols} [{'ok' if ok else 'MISMATCH'}] {dt:.2f}s")

    worst = (0, None)
    start = time.perf_counter()
    for N in range(2, args.pell_max + 1):
        if math.isqrt(N) ** 2 == N:
            continue
        digits = len(str(chakravala(N).x))
        worst = max(worst, (digits, N))
    dt = time.perf_counter() - start
    print(f"chakravala for N <= {args.pell_max}: largest x has {worst[0]} digits (N={worst[1]}), {dt:.2f}s")


if __name__ == "__main__":
    main()
