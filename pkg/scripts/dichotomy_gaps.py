#!/usr/bin/env python3
"""How often the sparse-or-biclique dichotomy has no answer off its regime.

Draws random (A, B, t, threshold) instances whose sides carry no red K_t and
tallies certificates, bicliques and gaps (dense cross pairs with no induced
red K_{t,t}). Two regimes: ``natural`` uses fixed thresholds k/20, ``forced``
uses the counting bound past which a red K_{s,s} must exist, with s chosen so
every side of size s holds a blue K_t.
"""

from __future__ import annotations

import argparse
import math
import random
from collections import Counter
from fractions import Fraction
from itertools import combinations

from unavoidable import RED, GraphColoring, VertexSet
from unavoidable.errors import DichotomyGap
from unavoidable.extract import SparseCertificate, sparse_pair_or_biclique
from unavoidable.search import SearchBudget, find_mono_clique

RAMSEY_SIDE = {2: 2, 3: 6}


def cap(a: int, b: int, s: int) -> int:
    if a < s or b < s:
        return a * b
    one = (s - 1) ** (1 / s) * (b - s + 1) * a ** (1 - 1 / s) + (s - 1) * a
    two = (s - 1) ** (1 / s) * (a - s + 1) * b ** (1 - 1 / s) + (s - 1) * b
    return min(a * b, math.floor(min(one, two) * (1 + 1e-12)))


def instance(rng: random.Random, t: int, lo: int, hi: int, p: float, p_in: float):
    na, nb = rng.randint(lo, hi), rng.randint(lo, hi)
    red = [(a, na + b) for a in range(na) for b in range(nb) if rng.random() < p]
    for x, y in ((0, na), (na, na + nb)):
        red += [(u, v) for u, v in combinations(range(x, y), 2) if rng.random() < p_in]
    return GraphColoring.from_red_edges(na + nb, red), VertexSet.range(0, na), VertexSet.range(na, na + nb)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--regime", choices=["natural", "forced"], default="natural")
    ap.add_argument("--instances", type=int, default=1000)
    ap.add_argument("--t", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-side", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    budget = SearchBudget(10**9)
    tally: dict[int, Counter] = {t: Counter() for t in args.t}
    done = 0
    while done < args.instances:
        t = args.t[done % len(args.t)]
        s = RAMSEY_SIDE.get(t, t) if args.regime == "forced" else t
        p = rng.choice((1 / 4, 1 / 3, 1 / 2, 2 / 3, 3 / 4, 9 / 10))
        g, A, B = instance(rng, t, s, args.max_side, p, 0.0 if t == 2 else rng.choice((0.1, 0.2, 0.3)))
        if any(find_mono_clique(g, RED, t, budget, within=side) is not None for side in (A, B)):
            continue
        done += 1
        if args.regime == "forced":
            threshold = Fraction(cap(len(A), len(B), s), len(A) * len(B))
        else:
            threshold = Fraction(rng.randint(1, 10), 20)
        try:
            out = sparse_pair_or_biclique(g, A, B, t, threshold)
            tally[t]["certificate" if isinstance(out, SparseCertificate) else "biclique"] += 1
        except DichotomyGap:
            tally[t]["gap"] += 1
    for t, c in tally.items():
        total = sum(c.values())
        print(f"t={t} ({args.regime}): {dict(c)}; gap rate {c['gap'] / max(total, 1):.3f}")


if __name__ == "__main__":
    main()
