#!/usr/bin/env python3
"""Run the full statement harness over the standard corpus.

Usage:
    python scripts/run_verification.py [--order 4] [--groups-up-to 12]
                                       [--include-a5]

Exit status is nonzero when any statement comes back VIOLATED; the
witness is printed, because a violation falsifies either the theory or
this implementation and must never scroll past silently.
"""

from __future__ import annotations

import argparse
import time

from hyperalg.groups import alternating, from_group
from hyperalg.harness import CorpusEntry, build_corpus, run_harness


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=4, choices=(2, 3, 4))
    ap.add_argument("--groups-up-to", type=int, default=12)
    ap.add_argument("--include-a5", action="store_true",
                    help="add the order-60 simple group (slow but exhaustive)")
    args = ap.parse_args()

    t0 = time.time()
    corpus = build_corpus(max_enum_order=args.order, groups_up_to=args.groups_up_to)
    if args.include_a5:
        corpus.append(CorpusEntry(name="a5", provenance="group import, order 60",
                                  hypergroup=from_group(alternating(5))))
    report = run_harness(corpus)
    for line in report.lines():
        print(line)
    print(f"elapsed: {time.time() - t0:.1f}s")
    return 1 if report.violated else 0


if __name__ == "__main__":
    raise SystemExit(main())
