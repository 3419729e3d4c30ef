#!/usr/bin/env python3
"""Check the top-component triples (-w0(lam+mu), lam, mu) across types.

For each sampled (lam, mu), the invariant space of the triple is expected to
be one dimensional at every scale, while the sufficient descent conditions
usually fail outside type A.  Prints the invariant dimensions at N=1,2 and
the verdict for each sample.

Example:
    python3 scripts/top_triple_scan.py --types A2,B3,G2 --samples 5
"""

import argparse
import random

from gitdescent import (
    Weight,
    apply,
    longest_element,
    parse_type,
    triple_invariant_dim,
    verdict,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="A1,A2,C2,B3,G2")
    ap.add_argument("--samples", type=int, default=4)
    ap.add_argument("--max-coord", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for name in args.types.split(","):
        rs = parse_type(name.strip())
        w0 = longest_element(rs)
        print(f"== {rs.type_name}")
        for _ in range(args.samples):
            lam = Weight(tuple(rng.randint(1, args.max_coord) for _ in range(rs.rank)))
            mu = Weight(tuple(rng.randint(1, args.max_coord) for _ in range(rs.rank)))
            top = -apply(rs, w0, lam + mu)
            dims = [
                triple_invariant_dim(rs, n * top, n * lam, n * mu) for n in (1, 2)
            ]
            v = verdict(rs, top, lam, mu)
            print(
                f"  lam={lam.coords} mu={mu.coords} top={top.coords}"
                f"  dims(N=1,2)={dims}  verdict={v.outcome}"
            )


if __name__ == "__main__":
    main()
