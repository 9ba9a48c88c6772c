#!/usr/bin/env python3
"""Degree and clique statistics of the randomly recoloured P_m construction.

For each recolour probability, counts seeds that meet the n/4 + eps*n degree
bound under both readings of n (total vertex count, part size) and seeds whose
V1 u V2 carries no blue clique of the chosen sizes. Writes CSV to stdout.
"""

from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from unavoidable import BLUE, RED
from unavoidable.exact import as_fraction
from unavoidable.generators import gen_tightness, p_parts
from unavoidable.search import SearchBudget, Unknown, find_mono_clique


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", type=as_fraction, default=Fraction(1, 4))
    ap.add_argument("--t", type=int, default=8)
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--p", type=as_fraction, nargs="+", default=None,
                    help="recolour probabilities (default 2eps and 3eps)")
    ap.add_argument("--clique", type=int, nargs="+", default=[3, 8], help="blue clique sizes to look for")
    ap.add_argument("--budget", type=int, default=2_000_000)
    args = ap.parse_args()

    probs = args.p or [2 * args.eps, 3 * args.eps]
    budget = SearchBudget(args.budget)
    w = csv.writer(sys.stdout)
    w.writerow(["recolor_p", "n", "meets_total_reading", "meets_part_reading", "min_degree_mean"]
               + [f"no_blue_K{k}" for k in args.clique] + ["unknown"])
    for p in probs:
        total = part = unknown = 0
        free = [0] * len(args.clique)
        lows = []
        n = 0
        for seed in range(args.seeds):
            g = gen_tightness(args.eps, args.t, p, seed)
            n, m = g.n, g.n // 4
            low = min(g.min_degree(RED), g.min_degree(BLUE))
            lows.append(low)
            total += low >= Fraction(n, 4) + args.eps * n
            part += low >= m + args.eps * m
            V1, V2, _, _ = p_parts(m)
            for i, k in enumerate(args.clique):
                got = find_mono_clique(g, BLUE, k, budget, within=V1 | V2)
                unknown += isinstance(got, Unknown)
                free[i] += got is None
        w.writerow([str(p), n, total, part, f"{sum(lows) / len(lows):.2f}"] + free + [unknown])


if __name__ == "__main__":
    main()
