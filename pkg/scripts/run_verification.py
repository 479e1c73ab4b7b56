#!/usr/bin/env python3
"""Run every verification suite on every bundled system and print a table.

Usage: python scripts/run_verification.py [--seed N] [--grid G]
"""

import argparse
import sys
import time

from dyncross.characters import CircleGrid
from dyncross.fixtures import all_fixtures
from dyncross.verify import run_suites


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--grid", type=int, default=32)
    args = parser.parse_args()

    total = failures = 0
    for name, system in all_fixtures():
        start = time.time()
        records = run_suites("all", system, seed=args.seed,
                             grid=CircleGrid(args.grid))
        bad = [r for r in records if not r.passed]
        total += len(records)
        failures += len(bad)
        print(f"{name:12s} {len(records):3d} checks  "
              f"{len(bad):2d} failed  {time.time() - start:5.1f}s")
        for r in bad:
            print(f"    FAIL {r.suite}.{r.name}  {r.detail}")
    print(f"\n{total} checks, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
