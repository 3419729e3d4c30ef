#!/usr/bin/env python3
"""Scan all dominant-regular triples with bounded coordinates for one type
and tally the verdict outcomes.

Example:
    python3 scripts/verdict_grid.py --type C2 --max-coord 3
"""

import argparse
from collections import Counter
from itertools import product

from gitdescent import Weight, parse_type, verdict


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default="A2")
    ap.add_argument("--max-coord", type=int, default=2)
    ap.add_argument("--size-bound", type=int, default=10**6)
    ap.add_argument("--show", choices=("none", "unknown", "all"), default="none",
                    help="also print individual triples in this outcome class")
    args = ap.parse_args()

    rs = parse_type(args.type)
    coords = range(1, args.max_coord + 1)
    tally = Counter()
    shown = []
    for trip in product(product(coords, repeat=rs.rank), repeat=3):
        lam, mu, nu = (Weight(t) for t in trip)
        v = verdict(rs, lam, mu, nu, size_bound=args.size_bound)
        tally[v.outcome] += 1
        if args.show == "all" or (args.show == "unknown" and v.outcome == "Unknown"):
            shown.append(trip)

    total = sum(tally.values())
    print(f"{rs.type_name}: {total} triples with coordinates in 1..{args.max_coord}")
    for outcome in ("Descends", "DoesNotDescend", "Unknown"):
        print(f"  {outcome:>15}: {tally.get(outcome, 0)}")
    for trip in shown:
        print("   ", trip)


if __name__ == "__main__":
    main()
