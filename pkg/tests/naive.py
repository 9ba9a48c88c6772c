"""Enumerate-all-subsets reference detectors, kept out of the package on purpose.

Each returns True/False for existence only; they share no code with the
search module beyond the colouring accessor.
"""

from __future__ import annotations

from itertools import combinations

from unavoidable import BLUE, RED


def _mono(g, color, S):
    return all(g.color_of(u, v) is color for u, v in combinations(S, 2))


def _cross(g, color, A, B):
    return all(g.color_of(a, b) is color for a in A for b in B)


def has_mono_clique(g, color, t):
    return any(_mono(g, color, S) for S in combinations(range(g.n), t))


def has_induced_biclique(g, color, t):
    other = color.opposite
    for A in combinations(range(g.n), t):
        if not _mono(g, other, A):
            continue
        rest = [v for v in range(g.n) if v not in A]
        for B in combinations(rest, t):
            if _mono(g, other, B) and _cross(g, color, A, B):
                return True
    return False


def is_p_pattern(g, V1, V2, V3, V4):
    return (
        _mono(g, RED, V1 + V2)
        and _mono(g, BLUE, V3 + V4)
        and _cross(g, RED, V1, V3)
        and _cross(g, RED, V2, V4)
        and _cross(g, BLUE, V1, V4)
        and _cross(g, BLUE, V2, V3)
    )


def is_alt_blowup(g, A0, A1, A2, A3):
    return (
        all(_mono(g, RED, A) or _mono(g, BLUE, A) for A in (A0, A1, A2, A3))
        and _cross(g, RED, A0, A1)
        and _cross(g, RED, A2, A3)
        and _cross(g, BLUE, A1, A2)
        and _cross(g, BLUE, A3, A0)
    )


def _subsets(pool, t, used):
    return combinations([v for v in pool if v not in used], t)


def has_p_pattern(g, t):
    # the five rules checked as soon as the parts they mention are chosen
    n = range(g.n)
    for V1 in combinations(n, t):
        if not _mono(g, RED, V1):
            continue
        for V2 in _subsets(n, t, set(V1)):
            if not _mono(g, RED, V1 + V2):
                continue
            for V3 in _subsets(n, t, set(V1 + V2)):
                if not (_mono(g, BLUE, V3) and _cross(g, RED, V1, V3) and _cross(g, BLUE, V2, V3)):
                    continue
                for V4 in _subsets(n, t, set(V1 + V2 + V3)):
                    if is_p_pattern(g, V1, V2, V3, V4):
                        return True
    return False


def has_alt_blowup(g, t):
    n = range(g.n)
    mono = lambda A: _mono(g, RED, A) or _mono(g, BLUE, A)
    for A0 in combinations(n, t):
        if not mono(A0):
            continue
        for A1 in _subsets(n, t, set(A0)):
            if not (mono(A1) and _cross(g, RED, A0, A1)):
                continue
            for A2 in _subsets(n, t, set(A0 + A1)):
                if not (mono(A2) and _cross(g, BLUE, A1, A2)):
                    continue
                for A3 in _subsets(n, t, set(A0 + A1 + A2)):
                    if is_alt_blowup(g, A0, A1, A2, A3):
                        return True
    return False


def has_local_pattern(g, t):
    return has_induced_biclique(g, RED, t) or has_induced_biclique(g, BLUE, t) or has_p_pattern(g, t)


def best_common_size(g, A, B, color, k):
    """max over k-subsets S of A of |color-common neighbourhood of S in B|."""
    best = -1
    for S in combinations(sorted(A), k):
        size = sum(1 for b in B if all(g.color_of(s, b) is color for s in S))
        best = max(best, size)
    return best
