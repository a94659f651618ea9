#!/usr/bin/env python3
"""Print |UFR_n| by brute force next to the recurrence, and the rank-refined
interval counts next to the closed form."""

import argparse
import time
from collections import Counter

from weakfubini import counting, oracle


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--max-interval-n", type=int, default=5)
    args = parser.parse_args()

    print(f"{'n':>2}  {'brute |UFR_n|':>14}  {'f(n)':>10}  seconds")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        found = sum(1 for _ in oracle.brute_tuples(n, "unit-fubini", cap=args.max_n))
        print(f"{n:>2}  {found:>14}  {counting.f_total(n):>10}  {time.perf_counter() - t0:7.2f}")

    print()
    print(f"{'n':>2}  {'k':>2}  {'brute':>7}  {'f(n,k)':>7}")
    for n in range(1, args.max_interval_n + 1):
        ranks = Counter(k for *_, k in oracle.brute_boolean_intervals(n, cap=args.max_interval_n))
        for k in range(n // 2 + 1):
            print(f"{n:>2}  {k:>2}  {ranks[k]:>7}  {counting.f_closed(n, k):>7}")


if __name__ == "__main__":
    main()
