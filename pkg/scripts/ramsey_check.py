#!/usr/bin/env python3
"""Stream every 2-colouring of K_n and count those without a monochromatic K_t.

With the defaults (n=6, t=3) the count is zero; n=5 finds the red-C5 colourings.
"""

from __future__ import annotations

import argparse
import time

from unavoidable.search import all_colorings, find_any_mono_clique


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--show", type=int, default=3, help="print this many clique-free colourings")
    args = ap.parse_args()

    start = time.perf_counter()
    total = free = 0
    for g in all_colorings(args.n):
        total += 1
        if find_any_mono_clique(g, args.t) is None:
            free += 1
            if free <= args.show:
                print("clique-free:", g.red_edges())
    print(f"n={args.n} t={args.t}: {total} colourings, {free} without a monochromatic K_{args.t} "
          f"({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
