"""Constructive versions of the standard tools: random balanced bipartition,
Ramsey pivot walk, Kovari-Sos-Turan common neighbourhoods, dependent random
choice, the clique triple built from two rounds of dependent random choice,
and the sparse-or-biclique dichotomy.

Every function takes masks or :class:`VertexSet` arguments, returns plain
sets/witnesses, and appends to an optional :class:`ExtractionTrace`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from ..errors import (
    DichotomyGap,
    OverlappingSets,
    PreconditionFailed,
    ResampleExhausted,
    RetriesExhausted,
    StageFailed,
)
from ..exact import Rational, as_fraction, cmp_exp, kst_bound
from ..graph import BLUE, RED, Color, DegreeThreshold, GraphColoring, SetLike, VertexSet, iter_bits, to_mask
from ..patterns import InducedBiclique, MonoClique
from ..search import (
    DEFAULT_BUDGET,
    SearchBudget,
    Unknown,
    find_any_mono_clique,
    find_induced_biclique,
    find_mono_clique,
    first_mono_set,
    max_common_set,
)
from .params import ExtractionTrace, ExtractorParams, _note


def _vs(m: int) -> VertexSet:
    return VertexSet.from_mask(m)


def _cross_count(g: GraphColoring, color: Color, a: int, b: int) -> int:
    return sum((g.row(color, v) & b).bit_count() for v in iter_bits(a))


def _first_k(mask: int, k: int) -> int:
    out = 0
    for v in iter_bits(mask):
        if k == 0:
            break
        out |= 1 << v
        k -= 1
    return out


# --- random balanced bipartition ----------------------------------------------


def partition_defect(g: GraphColoring, eps: Fraction, x: int, y: int) -> Optional[tuple[str, int]]:
    """First violated balance condition as ``(condition, vertex)``, or None if balanced.

    Balanced means both parts exceed n/3 and every vertex has at least eps*n/3
    neighbours of each colour in each part.
    """
    n = g.n
    if 3 * x.bit_count() <= n:
        return ("size_X", -1)
    if 3 * y.bit_count() <= n:
        return ("size_Y", -1)
    need = eps * n / 3
    for v in range(n):
        for color in (RED, BLUE):
            r = g.row(color, v)
            if (r & x).bit_count() < need:
                return (f"{color.value}_in_X", v)
            if (r & y).bit_count() < need:
                return (f"{color.value}_in_Y", v)
    return None


def _defect_count(g, eps, x, y) -> int:
    n = g.n
    need = eps * n / 3
    bad = (3 * x.bit_count() <= n) + (3 * y.bit_count() <= n)
    for v in range(n):
        for color in (RED, BLUE):
            r = g.row(color, v)
            bad += ((r & x).bit_count() < need) + ((r & y).bit_count() < need)
    return bad


def balanced_partition(
    g: GraphColoring,
    eps: Rational,
    params: Optional[ExtractorParams] = None,
    trace: Optional[ExtractionTrace] = None,
) -> tuple[VertexSet, VertexSet]:
    """Seeded uniform bipartition meeting the size and per-part degree conditions."""
    eps = as_fraction(eps)
    params = params or ExtractorParams()
    if not g.min_degree_ok(DegreeThreshold.linear(eps)):
        raise PreconditionFailed("minimum degree below eps*n in some colour", eps=str(eps))
    rng = random.Random(params.seed)
    best = None
    for attempt in range(1, params.resample_limit + 1):
        x = rng.getrandbits(g.n)
        y = g.full ^ x
        defect = partition_defect(g, eps, x, y)
        if defect is None:
            _note(trace, "chernoff_partition", f"balanced after {attempt} attempt(s)", X=x.bit_count(), Y=y.bit_count())
            return _vs(x), _vs(y)
        count = _defect_count(g, eps, x, y)
        if best is None or count < best["violations"]:
            best = {"X": sorted(iter_bits(x)), "Y": sorted(iter_bits(y)), "violations": count,
                    "condition": defect[0], "vertex": defect[1]}
    _note(trace, "chernoff_partition", "resample limit reached", attempts=params.resample_limit)
    raise ResampleExhausted(
        f"no balanced partition in {params.resample_limit} attempts", params.resample_limit, best or {}
    )


# --- Ramsey pivot walk ---------------------------------------------------------


def pivot_walk(g: GraphColoring, s: int) -> tuple[list[int], list[Color]]:
    """Pivots and their kept colours; the final pivot's colour is free.

    Each step takes the lowest live vertex and keeps its larger colour class
    (red on ties), so pivots of one kept colour form a clique in that colour.
    """
    pivots, colors = [], []
    live = s
    while live:
        low = live & -live
        v = low.bit_length() - 1
        live ^= low
        r = live & g.red[v]
        b = live ^ r
        if r.bit_count() >= b.bit_count():
            pivots.append(v)
            colors.append(RED)
            live = r
        else:
            pivots.append(v)
            colors.append(BLUE)
            live = b
    return pivots, colors


def pivot_clique(g: GraphColoring, s: int, t: int) -> Optional[MonoClique]:
    """Largest-class clique from the pivot walk, truncated to t, or None if too short."""
    pivots, colors = pivot_walk(g, s)
    if not pivots:
        return None
    head, last = pivots[:-1], pivots[-1]
    reds = [v for v, c in zip(head, colors) if c is RED]
    blues = [v for v, c in zip(head, colors) if c is BLUE]
    color, cls = (RED, reds) if len(reds) >= len(blues) else (BLUE, blues)
    cls = cls + [last]
    if len(cls) < t:
        return None
    return MonoClique(color, tuple(sorted(cls[:t])))


def ramsey_clique(g: GraphColoring, S: SetLike, t: int, trace: Optional[ExtractionTrace] = None) -> MonoClique:
    """Monochromatic t-clique inside S, for |S| >= 4**t."""
    s = to_mask(S)
    if s.bit_count() < 4**t:
        raise PreconditionFailed(f"|S|={s.bit_count()} < 4^t={4**t}", size=s.bit_count(), t=t)
    w = pivot_clique(g, s, t)
    assert w is not None, "pivot walk shorter than the Ramsey bound allows"
    _note(trace, "ramsey_pivot", f"{w.color.value} clique", S=s.bit_count(), t=t)
    return w


def mono_clique_in(
    g: GraphColoring, s: int, t: int, budget: SearchBudget = DEFAULT_BUDGET, color: Optional[Color] = None
) -> Optional[MonoClique]:
    """Pivot walk when it suffices, exhaustive search otherwise; None if absent or undecided."""
    if t <= 0:
        return None
    if color is None:
        w = pivot_clique(g, s, t)
        if w is not None:
            return w
        res = find_any_mono_clique(g, t, budget, within=_vs(s)) if s.bit_count() >= t else None
    else:
        res = find_mono_clique(g, color, t, budget, within=_vs(s)) if s.bit_count() >= t else None
    return res if isinstance(res, MonoClique) else None


# --- KST common neighbourhoods ----------------------------------------------------


def _greedy_common(g: GraphColoring, a: int, b: int, color: Color, k: int) -> tuple[int, int]:
    s, n_mask = 0, b
    rest = a
    for _ in range(k):
        best_v, best_size = -1, -1
        for v in iter_bits(rest):
            size = (n_mask & g.row(color, v)).bit_count()
            if size > best_size:
                best_v, best_size = v, size
        s |= 1 << best_v
        rest &= ~(1 << best_v)
        n_mask &= g.row(color, best_v)
    return s, n_mask


def kst_subset(
    g: GraphColoring,
    A: SetLike,
    B: SetLike,
    color: Color,
    k: int,
    alpha: Rational,
    trace: Optional[ExtractionTrace] = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[VertexSet, VertexSet]:
    """k-subset S of A whose ``color``-common neighbourhood N in B has >= ceil((alpha/e)^k |B|) vertices.

    Greedy (largest surviving neighbourhood first); if greedy falls short of the
    bound an exact branch-and-bound maximum is taken instead.
    """
    a, b = to_mask(A), to_mask(B)
    alpha = as_fraction(alpha)
    if a & b:
        raise OverlappingSets("A and B must be disjoint")
    if not 0 < alpha <= 1:
        raise PreconditionFailed("alpha must lie in (0, 1]", alpha=str(alpha))
    na, nb = a.bit_count(), b.bit_count()
    if alpha * na < k:
        raise PreconditionFailed(f"|A|={na} < k/alpha={k / alpha}", inequality="|A| >= k/alpha")
    edges = _cross_count(g, color, a, b)
    if edges < alpha * na * nb:
        raise PreconditionFailed(
            f"e(A,B)={edges} < alpha|A||B|={alpha * na * nb}", inequality="e(A,B) >= alpha|A||B|"
        )
    bound = kst_bound(alpha, k, nb)
    s, n_mask = _greedy_common(g, a, b, color, k)
    how = "greedy"
    if n_mask.bit_count() < bound:
        best = max_common_set(g, a, k, color, b, budget=budget)
        assert best is not None
        s, n_mask, _ = best
        how = "exact"
    _note(trace, "kst_greedy", how, Fraction(edges, na * nb), A=na, B=nb, k=k, N=n_mask.bit_count(), bound=bound)
    return _vs(s), _vs(n_mask)


@dataclass(frozen=True)
class RamseyKstResult:
    S: VertexSet
    color: Color
    N: VertexSet
    clique: Optional[MonoClique]


def ramsey_kst(
    g: GraphColoring, A: SetLike, B: SetLike, k: int, trace: Optional[ExtractionTrace] = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> RamseyKstResult:
    """Monochromatic K_{k, >=|B|/(2e)^k} with its k-side in A; plus a monochromatic
    k-clique in the large side when |B| >= (4e)^k."""
    a, b = to_mask(A), to_mask(B)
    if a & b:
        raise OverlappingSets("A and B must be disjoint")
    if a.bit_count() < 2 * k:
        raise PreconditionFailed(f"|A|={a.bit_count()} < 2k={2 * k}", inequality="|A| >= 2k")
    red = _cross_count(g, RED, a, b)
    color = RED if 2 * red >= a.bit_count() * b.bit_count() else BLUE
    s, n = kst_subset(g, _vs(a), _vs(b), color, k, Fraction(1, 2), trace, budget)
    clique = None
    if cmp_exp(4**k, k, b.bit_count()) <= 0:
        clique = mono_clique_in(g, n.mask, k, budget)
        if clique is None:
            raise PreconditionFailed("no monochromatic k-clique in the common neighbourhood", N=len(n), k=k)
    _note(trace, "ramsey_kst", color.value, A=a.bit_count(), B=b.bit_count(), N=len(n), clique=int(clique is not None))
    return RamseyKstResult(s, color, n, clique)


# --- dependent random choice ------------------------------------------------------


def _violations(rows: list[int], target: int, verts: list[int], s: int, m: int) -> dict[int, int]:
    """Per-vertex number of s-subsets of ``verts`` with fewer than m common neighbours in ``target``.

    Violation is upward closed, so each violating subset is counted once at the
    first prefix of its sorted DFS path whose neighbourhood falls below m.
    """
    counts: dict[int, int] = {}
    L = len(verts)
    if s > L:
        return counts
    if s == 0:
        if target.bit_count() < m:
            return {v: 0 for v in verts} | {-1: 1}
        return counts

    def rec(start, chosen, common):
        k = len(chosen)
        for idx in range(start, L):
            rem = L - idx - 1
            need = s - k - 1
            if rem < need:
                return
            v = verts[idx]
            nc = common & rows[v]
            size = nc.bit_count()
            if size < m:
                total = comb(rem, need)
                for p in chosen:
                    counts[p] = counts.get(p, 0) + total
                counts[v] = counts.get(v, 0) + total
                if need:
                    each = comb(rem - 1, need - 1)
                    for w in verts[idx + 1 :]:
                        counts[w] = counts.get(w, 0) + each
                continue
            if need == 0:
                continue
            # no violation below if even the worst `need` extra vertices keep >= m
            losses = sorted(((nc & ~rows[w]).bit_count() for w in verts[idx + 1 :]), reverse=True)
            if size - sum(losses[:need]) >= m:
                continue
            rec(idx + 1, chosen + [v], nc)

    rec(0, [], target)
    return counts


def drc_violations(g: GraphColoring, A: SetLike, S: SetLike, color: Color, s: int, m: int) -> dict[int, int]:
    """Exported for tests: violation counts of S against A."""
    return _violations(g.rows(color), to_mask(A), list(iter_bits(to_mask(S))), s, m)


def _drc_once(g, a, b, color, m, r, s, rng) -> tuple[int, int, int]:
    """One sample-and-delete pass; returns (surviving mask, initial size, deletions)."""
    verts_a = list(iter_bits(a))
    rows = g.rows(color)
    common = b
    for _ in range(r):
        common &= rows[verts_a[rng.randrange(len(verts_a))]]
    start = common.bit_count()
    deletions = 0
    while True:
        counts = _violations(rows, a, list(iter_bits(common)), s, m)
        if not counts:
            return common, start, deletions
        worst = max(counts.items(), key=lambda kv: (kv[1], -kv[0]))[0]
        common &= ~(1 << worst)
        deletions += 1


def drc_inequality(size_a: int, size_b: int, delta: Fraction, a: int, m: int, r: int, s: int) -> bool:
    """``|B|(delta/e)^r - |B|^s m^r / |A|^r >= a``, decided exactly."""
    rhs = a + Fraction(size_b**s * m**r, size_a**r)
    return cmp_exp(size_b * delta**r, -r, rhs) >= 0


def drc_subset(
    g: GraphColoring,
    A: SetLike,
    B: SetLike,
    color: Color,
    a: int,
    m: int,
    r: int,
    s: int,
    seed: int = 0,
    max_rounds: int = 64,
    trace: Optional[ExtractionTrace] = None,
    check_precondition: bool = True,
) -> VertexSet:
    """S within B, |S| >= a, every s-subset with >= m ``color``-common neighbours in A."""
    am, bm = to_mask(A), to_mask(B)
    if am & bm:
        raise OverlappingSets("A and B must be disjoint")
    na, nb = am.bit_count(), bm.bit_count()
    if na == 0 or nb == 0:
        raise PreconditionFailed("A and B must be non-empty")
    delta = Fraction(_cross_count(g, color, am, bm), na * nb)
    holds = delta > 0 and drc_inequality(na, nb, delta, a, m, r, s)
    if check_precondition and not holds:
        raise PreconditionFailed(
            "|B|(delta/e)^r - |B|^s m^r/|A|^r < a", delta=str(delta), a=a, m=m, r=r, s=s
        )
    if delta == 0:
        raise PreconditionFailed("empty colour class between A and B", delta="0")
    rng = random.Random(seed)
    sizes = []
    for attempt in range(1, max_rounds + 1):
        got, start, dels = _drc_once(g, am, bm, color, m, r, s, rng)
        sizes.append(got.bit_count())
        if got.bit_count() >= a:
            _note(trace, "dependent_random_choice", f"ok after {attempt} sample(s)", delta,
                  A=na, B=nb, S=got.bit_count(), sampled=start, deleted=dels, s=s, m=m, r=r)
            return _vs(got)
    _note(trace, "dependent_random_choice", "retries exhausted", delta, A=na, B=nb, best=max(sizes))
    raise RetriesExhausted(f"no set of size {a} in {max_rounds} samples", {"sizes": sizes, "a": a})


# --- clique triple -------------------------------------------------------------------


@dataclass(frozen=True)
class Moreover:
    """Monochromatic complete bipartite piece between A' and C' with a clique side."""

    side: str  # "A" or "C": which of A', C' hosts the clique
    clique: MonoClique
    color: Color  # colour of the bipartite pairs
    partner: VertexSet  # common neighbours of the clique on the other side


@dataclass(frozen=True)
class Triple:
    A: VertexSet
    B: MonoClique
    C: VertexSet
    moreover: Optional[Moreover]
    route: str  # "drc" or "search"


def _moreover(g, a, c, q, sides, budget) -> Optional[Moreover]:
    best = None
    for side in sides:
        host, other = (a, c) if side == "A" else (c, a)
        for color in (RED, BLUE):
            got = max_common_set(g, host, q, color, other, clique="mono", budget=budget)
            if got is None:
                continue
            k, common, _ = got
            if best is None or common.bit_count() > best[3].bit_count():
                best = (side, k, color, common)
        if best is not None:
            side, k, color, common = best
            cl = MonoClique(RED if _is_red_clique(g, k) else BLUE, tuple(iter_bits(k)))
            return Moreover(side, cl, color, _vs(common))
    return None


def _is_red_clique(g, m):
    for v in iter_bits(m):
        rest = m ^ (1 << v)
        if g.red[v] & rest != rest:
            return False
    return True


def clique_triple(
    g: GraphColoring,
    A: SetLike,
    B: SetLike,
    C: SetLike,
    delta: Rational,
    q: int,
    params: Optional[ExtractorParams] = None,
    *,
    colors: tuple[Color, Color] = (RED, BLUE),
    floors: tuple[int, int] = (1, 1),
    moreover_sides: tuple[str, ...] = ("A", "C"),
    trace: Optional[ExtractionTrace] = None,
) -> Triple:
    """Monochromatic q-clique B' in B with a large colour-1 common neighbourhood A'
    in A and a large colour-2 common neighbourhood C' in C.

    Route: dependent random choice on (A, B), again on (C, B1), then a
    monochromatic q-clique in B2.  When a stage comes up short at this scale an
    exact branch-and-bound search over cliques of B with the same floors is used.
    A and C may overlap (A' and C' are disjoint since the colours differ).
    """
    params = params or ExtractorParams()
    delta = as_fraction(delta)
    am, bm, cm = to_mask(A), to_mask(B), to_mask(C)
    c1, c2 = colors
    if am & bm or bm & cm:
        raise OverlappingSets("B must be disjoint from A and C")
    if not am or not bm or not cm:
        raise PreconditionFailed("A, B, C must be non-empty")
    e1 = _cross_count(g, c1, am, bm)
    if e1 < delta * am.bit_count() * bm.bit_count():
        raise PreconditionFailed(f"e_{c1.value}(A,B) below delta|A||B|", density=str(Fraction(e1, am.bit_count() * bm.bit_count())))
    need_c = delta * cm.bit_count()
    for u in iter_bits(bm):
        if (g.row(c2, u) & cm).bit_count() < need_c:
            raise PreconditionFailed(f"vertex {u} of B has too few {c2.value} neighbours in C", vertex=u)
    budget = params.budget
    fa, fc = floors
    m1 = max(fa, math.isqrt(am.bit_count() - 1) + 1 if am.bit_count() > 1 else 1)
    m2 = max(fc, _ceil_cbrt(cm.bit_count()))
    rng = random.Random(params.seed)
    route, failed_stage = "drc", None
    b_clique = None
    b1 = _drc_stage(g, am, bm, c1, q, m1, params, rng)
    _note(trace, "dependent_random_choice", "stage 1 " + ("ok" if b1 else "short"), Fraction(e1, am.bit_count() * bm.bit_count()),
          A=am.bit_count(), B=bm.bit_count(), B1=b1.bit_count(), m=m1, s=q)
    if b1.bit_count() < q:
        failed_stage = "drc_1"
    else:
        b2 = _drc_stage(g, cm, b1, c2, q, m2, params, rng)
        _note(trace, "dependent_random_choice", "stage 2 " + ("ok" if b2 else "short"), B1=b1.bit_count(), B2=b2.bit_count(), m=m2, s=q)
        if b2.bit_count() < q:
            failed_stage = "drc_2"
        else:
            b_clique = mono_clique_in(g, b2, q, budget)
            if b_clique is None:
                failed_stage = "ramsey"
    if b_clique is None:
        route = "search"
        got = first_mono_set(g, bm, q, sides=[(c1, am, fa), (c2, cm, fc)], budget=budget)
        if not isinstance(got, tuple):
            _note(trace, "triple", f"{failed_stage} short; exact search found nothing", B=bm.bit_count(), q=q)
            raise StageFailed(failed_stage or "search", "no clique meets the floors", floors=floors, q=q)
        k = got[0]
        b_clique = MonoClique(RED if _is_red_clique(g, k) else BLUE, tuple(iter_bits(k)))
    km = to_mask(b_clique.S)
    a_out = g.common_mask(c1, km) & am
    c_out = g.common_mask(c2, km) & cm
    if a_out.bit_count() < fa or c_out.bit_count() < fc:
        raise StageFailed("floors", "common neighbourhoods below floors", A=a_out.bit_count(), C=c_out.bit_count())
    more = _moreover(g, a_out, c_out, q, moreover_sides, budget)
    _note(trace, "triple", route + (f" after {failed_stage} short" if failed_stage else ""),
          A1=a_out.bit_count(), B1=q, C1=c_out.bit_count())
    _note(trace, "triple_moreover", "none" if more is None else f"side {more.side} {more.color.value}",
          partner=0 if more is None else len(more.partner))
    return Triple(_vs(a_out), b_clique, _vs(c_out), more, route)


lemma123_triple = clique_triple


def _ceil_cbrt(x: int) -> int:
    r = max(1, round(x ** (1 / 3)))
    while r**3 < x:
        r += 1
    while r > 1 and (r - 1) ** 3 >= x:
        r -= 1
    return r


def _drc_stage(g, target, b, color, q, m, params, rng) -> int:
    """Best of a few sample-and-delete passes (no inequality check: desk-scale use)."""
    best = 0
    if not target or not b:
        return 0
    for _ in range(params.drc_attempts):
        got, _, _ = _drc_once(g, target, b, color, m, params.drc_samples, q, rng)
        if got.bit_count() > best.bit_count():
            best = got
        if best.bit_count() >= 2 * q:
            break
    return best


# --- sparse pair or biclique -------------------------------------------------------


@dataclass(frozen=True)
class SparseCertificate:
    color: Color
    pairs: int
    size_a: int
    size_b: int
    threshold: Fraction

    @property
    def density(self) -> Fraction:
        return Fraction(self.pairs, self.size_a * self.size_b)

    def to_dict(self):
        from ..exact import fmt_fraction

        return {
            "kind": "sparse_certificate",
            "color": self.color.value,
            "pairs": self.pairs,
            "size_a": self.size_a,
            "size_b": self.size_b,
            "density": fmt_fraction(self.density),
            "threshold": fmt_fraction(self.threshold),
        }


def sparse_pair_or_biclique(
    g: GraphColoring,
    A: SetLike,
    B: SetLike,
    t: int,
    threshold: Rational,
    *,
    color: Color = RED,
    trace: Optional[ExtractionTrace] = None,
    budget: SearchBudget = DEFAULT_BUDGET,
):
    """Exact sparse certificate for the ``color`` pairs of A x B, or an induced ``color`` K_{t,t}.

    Neither side may contain a ``color`` t-clique; the biclique sides are then
    opposite-colour cliques.  A dense pair with no biclique raises
    :class:`DichotomyGap`.
    """
    a, b = to_mask(A), to_mask(B)
    threshold = as_fraction(threshold)
    if a & b:
        raise OverlappingSets("A and B must be disjoint")
    if not a or not b:
        raise PreconditionFailed("A and B must be non-empty")
    for name, side in (("A", a), ("B", b)):
        if side.bit_count() >= t:
            hit = find_mono_clique(g, color, t, budget, within=_vs(side))
            if isinstance(hit, MonoClique):
                raise PreconditionFailed(f"{color.value} K_{t} inside {name}", side=name, clique=list(hit.S))
            if isinstance(hit, Unknown):
                raise PreconditionFailed(f"could not certify {name} free of {color.value} K_{t}", side=name)
    pairs = _cross_count(g, color, a, b)
    na, nb = a.bit_count(), b.bit_count()
    density = Fraction(pairs, na * nb)
    if density <= threshold:
        _note(trace, "sparse_or_biclique", "sparse", density, A=na, B=nb, pairs=pairs)
        return SparseCertificate(color, pairs, na, nb, threshold)
    other = color.opposite
    w = None
    if na >= t and nb >= t:
        # clique of A with the largest colour-common neighbourhood in B, then a clique there
        best = max_common_set(g, a, t, color, b, clique=other.value, budget=budget)
        if best is not None:
            s, n, _ = best
            inner = mono_clique_in(g, n, t, budget, color=other)
            if inner is not None:
                w = InducedBiclique(color, tuple(iter_bits(s)), inner.S)
        if w is None:
            got = find_induced_biclique(g, color, t, budget, side_a=_vs(a), side_b=_vs(b))
            if isinstance(got, InducedBiclique):
                w = got
    if w is None:
        _note(trace, "sparse_or_biclique", "dense without biclique", density, A=na, B=nb, pairs=pairs)
        raise DichotomyGap(pairs, na, nb, threshold)
    _note(trace, "sparse_or_biclique", "biclique", density, A=na, B=nb, pairs=pairs)
    return w
