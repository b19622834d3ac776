#!/usr/bin/env python3
"""Survey the enumeration: survivor counts, reject breakdown, timing.

Usage:
    python scripts/enumerate_survey.py [--max-order 4] [--naive-check]

--naive-check additionally runs the unpruned sweep at orders 2..3 and
compares survivor sets (the order-4 space is out of naive reach).
"""

from __future__ import annotations

import argparse
import time

from hyperalg.enumeration import enumerate_hypergroups, naive_enumerate


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=4, choices=(2, 3, 4))
    ap.add_argument("--naive-check", action="store_true")
    args = ap.parse_args()

    for order in range(2, args.max_order + 1):
        t0 = time.time()
        result = enumerate_hypergroups(order, canonicalize=True)
        dt = time.time() - t0
        print(f"order {order}: candidates={result.candidates} "
              f"survivors={len(result.survivors)} "
              f"canonical={len(result.canonical)} ({dt:.2f}s)")
        for key in sorted(result.rejects):
            print(f"  rejects[{key}] = {result.rejects[key]}")
        if args.naive_check and order <= 3:
            t0 = time.time()
            naive = naive_enumerate(order)
            same = [h.table for h in naive.survivors] == \
                   [h.table for h in result.survivors]
            print(f"  naive sweep: survivors={len(naive.survivors)} "
                  f"identical={same} ({time.time() - t0:.2f}s)")
            if not same:
                return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
