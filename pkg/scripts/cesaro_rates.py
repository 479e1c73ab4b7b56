#!/usr/bin/env python3
"""Convergence of the weighted truncations in the series norm and the
C*-norm, against the degree/(N+1) rate.

Usage: python scripts/cesaro_rates.py [--fixture NAME]
"""

import argparse
import random

from dyncross.algebra import cesaro_mean
from dyncross.characters import CircleGrid
from dyncross.fixtures import FIXTURES, fixture
from dyncross.gns import cstar_norm
from dyncross.sampling import random_element


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--fixture", choices=sorted(FIXTURES), default="swap2")
    parser.add_argument("--degree", type=int, default=4)
    parser.add_argument("--seed", type=int, default=2)
    args = parser.parse_args()

    system = fixture(args.fixture)
    rng = random.Random(args.seed)
    x = random_element(system.space, rng, args.degree, multiply_slack=0)
    d = x.degree
    norm = x.ell1_norm()
    grid = CircleGrid(64)
    print(f"system {args.fixture}, degree {d}, series norm {norm:.4f}")
    print(f"{'N':>4s} {'series gap':>12s} {'cstar gap':>12s} {'rate bound':>12s}")
    for n in range(d, 8 * d + 1):
        diff = cesaro_mean(x, n) - x
        series_gap = diff.ell1_norm()
        cstar_gap = cstar_norm(system, diff, grid, refine=False).value
        bound = d / (n + 1) * norm
        print(f"{n:4d} {series_gap:12.6f} {cstar_gap:12.6f} {bound:12.6f}")


if __name__ == "__main__":
    main()
