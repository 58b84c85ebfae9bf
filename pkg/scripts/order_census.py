#!/usr/bin/env python3
"""Census of element orders over a word-length ball.

Counts how many distinct group elements of each order appear among the
reduced words of length <= n, cross-checking the recursive order
computation against the tree-action squaring oracle on a sample.

Usage: python3 scripts/order_census.py [--maxn 6] [--oracle-sample 50]
"""

import argparse
import random
import sys
from collections import Counter

from grigorchuk.growth import ball_grigorchuk
from grigorchuk.wreath import order, order_by_squaring


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--maxn", type=int, default=6)
    ap.add_argument("--oracle-sample", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    table = ball_grigorchuk(args.maxn)
    reps = [w for level in table.representatives for w in level]
    orders = {w: order(w) for w in reps}
    census = Counter(orders.values())
    print(f"{len(reps)} distinct elements in the {args.maxn}-ball")
    for o in sorted(census):
        print(f"  order {o:3d}: {census[o]} elements")

    rng = random.Random(args.seed)
    sample = rng.sample(reps, min(args.oracle_sample, len(reps)))
    mismatches = [w for w in sample if order(w) != order_by_squaring(w)]
    if mismatches:
        print(f"ORACLE MISMATCH on {mismatches}")
        return 1
    print(f"squaring oracle agrees on {len(sample)} sampled elements")
    return 0


if __name__ == "__main__":
    sys.exit(main())
