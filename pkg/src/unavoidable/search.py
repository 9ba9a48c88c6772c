"""Complete branch-and-bound detectors for every pattern.

All searches walk candidate sets in ascending vertex order, so the first
witness found is the lexicographically first one (sorted sets, compared in
role order).  A node budget bounds the work; running out yields
:class:`Unknown`, which is never conflated with ``None`` (proved absent).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .errors import BudgetExhausted, TooLarge
from .graph import BLUE, RED, Color, GraphColoring, SetLike, iter_bits, to_mask
from .patterns import AltBlowup, InducedBiclique, LocalPattern, MonoClique, PPattern


class OnExhaust(enum.Enum):
    REPORT_UNKNOWN = "report_unknown"
    ERROR = "error"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 50_000_000
    on_exhaust: OnExhaust = OnExhaust.REPORT_UNKNOWN

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Unknown:
    """Search gave up after ``nodes`` nodes without deciding."""

    nodes: int

    def __bool__(self) -> bool:
        return False


class _OutOfBudget(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "cap")

    def __init__(self, cap: int):
        self.nodes = 0
        self.cap = cap

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise _OutOfBudget


def _above(v: int) -> int:
    """Mask selecting vertex ids strictly greater than ``v`` (as an infinite-precision int)."""
    return ~((2 << v) - 1)


def _mono_sets(
    rr: Sequence[int],
    br: Sequence[int],
    cand: int,
    t: int,
    red: bool,
    blue: bool,
    ctr: _Counter,
    sides: Sequence[tuple[Sequence[int], int, int]] = (),
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(mask, side_masks)`` for every t-subset of ``cand`` that is a red
    clique (if ``red``) or blue clique (if ``blue``), in lexicographic order.

    Each side constraint ``(rows, init, need)`` tracks ``init`` intersected with
    ``rows[v]`` over chosen vertices; branches are cut once it drops below ``need``.
    """
    side_rows = [s[0] for s in sides]
    needs = [s[2] for s in sides]

    def rec(chosen: int, k: int, rc: int, bc: int, sm: tuple[int, ...]):
        if k == t:
            yield chosen, sm
            return
        pool = rc | bc
        need = t - k
        while pool:
            if pool.bit_count() < need:
                return
            low = pool & -pool
            pool ^= low
            v = low.bit_length() - 1
            ctr.tick()
            hi = _above(v)
            nrc = rc & rr[v] & hi if rc & low else 0
            nbc = bc & br[v] & hi if bc & low else 0
            if need > 1 and (nrc | nbc).bit_count() < need - 1:
                continue
            if sm:
                nsm = tuple(m & rows[v] for m, rows in zip(sm, side_rows))
                if any(m.bit_count() < q for m, q in zip(nsm, needs)):
                    continue
            else:
                nsm = sm
            yield from rec(chosen | low, k + 1, nrc, nbc, nsm)

    init_sm = tuple(s[1] for s in sides)
    if any(m.bit_count() < q for m, q in zip(init_sm, needs)):
        return
    yield from rec(0, 0, cand if red else 0, cand if blue else 0, init_sm)


def _run(budget: SearchBudget, body):
    ctr = _Counter(budget.max_nodes)
    try:
        return body(ctr)
    except _OutOfBudget:
        if budget.on_exhaust is OnExhaust.ERROR:
            raise BudgetExhausted(ctr.nodes) from None
        return Unknown(ctr.nodes)


def _cand(g: GraphColoring, within: SetLike | None) -> int:
    if within is None:
        return g.full
    return to_mask(within) & g.full


SearchResult = Union[None, Unknown, MonoClique, InducedBiclique, PPattern, AltBlowup, LocalPattern]


# --- monochromatic cliques -----------------------------------------------------


def _clique_body(g, color, t, cand):
    rr, br = g.rows(RED), g.rows(BLUE)

    def body(ctr):
        for m, _ in _mono_sets(rr, br, cand, t, color is RED, color is BLUE, ctr):
            return MonoClique(color, tuple(iter_bits(m)))
        return None

    return body


def find_mono_clique(
    g: GraphColoring,
    color: Color,
    t: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    *,
    within: SetLike | None = None,
) -> SearchResult:
    """Lexicographically first ``color`` clique of size t (optionally inside ``within``)."""
    if not 1 <= t <= g.n:
        raise ValueError(f"need 1 <= t <= n, got t={t}")
    return _run(budget, _clique_body(g, color, t, _cand(g, within)))


def find_any_mono_clique(
    g: GraphColoring, t: int, budget: SearchBudget = DEFAULT_BUDGET, *, within: SetLike | None = None
) -> SearchResult:
    """Lexicographically first monochromatic t-clique of either colour."""
    if not 1 <= t <= g.n:
        raise ValueError(f"need 1 <= t <= n, got t={t}")
    cand = _cand(g, within)
    rr, br = g.rows(RED), g.rows(BLUE)

    def body(ctr):
        for m, _ in _mono_sets(rr, br, cand, t, True, True, ctr):
            color = RED if _is_clique_rows(rr, m) else BLUE
            return MonoClique(color, tuple(iter_bits(m)))
        return None

    return _run(budget, body)


def _is_clique_rows(rows, m):
    for v in iter_bits(m):
        rest = m ^ (1 << v)
        if rows[v] & rest != rest:
            return False
    return True


# --- induced bicliques ---------------------------------------------------------


def _biclique_search(g, color, t, cand_a, cand_b, symmetric, ctr):
    rows_c = g.rows(color)
    rr, br = g.rows(RED), g.rows(BLUE)
    side_red, side_blue = color is BLUE, color is RED  # sides are opposite-colour cliques
    for a, (bc,) in _mono_sets(rr, br, cand_a, t, side_red, side_blue, ctr, [(rows_c, cand_b, t)]):
        if symmetric:
            bc &= _above((a & -a).bit_length() - 1)
        for b, _ in _mono_sets(rr, br, bc, t, side_red, side_blue, ctr):
            return InducedBiclique(color, tuple(iter_bits(a)), tuple(iter_bits(b)))
    return None


def find_induced_biclique(
    g: GraphColoring,
    color: Color,
    t: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    *,
    within: SetLike | None = None,
    side_a: SetLike | None = None,
    side_b: SetLike | None = None,
) -> SearchResult:
    """Lexicographically first induced ``color`` K_{t,t}.

    Side A ranges over opposite-colour t-cliques; side B is then searched inside
    the ``color``-common neighbourhood of A.  ``side_a``/``side_b`` restrict each
    side separately (both default to ``within``).
    """
    if not 1 <= 2 * t <= g.n:
        raise ValueError(f"need 1 <= t <= n/2, got t={t}")
    base = _cand(g, within)
    ca = base if side_a is None else base & to_mask(side_a)
    cb = base if side_b is None else base & to_mask(side_b)
    symmetric = side_a is None and side_b is None
    return _run(budget, lambda ctr: _biclique_search(g, color, t, ca, cb, symmetric, ctr))


# --- P-patterns ------------------------------------------------------------------


def _p_search(g, t, cand, ctr):
    rr, br = g.rows(RED), g.rows(BLUE)
    sides1 = [(rr, cand, t), (rr, cand, t), (br, cand, t)]
    for v1, (c2, c3, c4) in _mono_sets(rr, br, cand, t, True, False, ctr, sides1):
        # (V1,V2,V3,V4) ~ (V2,V1,V4,V3): lexicographic minimality puts min V1 first
        c2 &= _above((v1 & -v1).bit_length() - 1)
        for v2, (d3, d4) in _mono_sets(rr, br, c2, t, True, False, ctr, [(br, c3, t), (rr, c4, t)]):
            for v3, (e4,) in _mono_sets(rr, br, d3, t, False, True, ctr, [(br, d4, t)]):
                for v4, _ in _mono_sets(rr, br, e4, t, False, True, ctr):
                    return PPattern(*(tuple(iter_bits(x)) for x in (v1, v2, v3, v4)))
    return None


def find_p_pattern(
    g: GraphColoring, t: int, budget: SearchBudget = DEFAULT_BUDGET, *, within: SetLike | None = None
) -> SearchResult:
    if not 1 <= 4 * t <= g.n:
        raise ValueError(f"need 1 <= t <= n/4, got t={t}")
    cand = _cand(g, within)
    return _run(budget, lambda ctr: _p_search(g, t, cand, ctr))


# --- alternating blowups -----------------------------------------------------------


def _alt_search(g, t, classes, symmetric, ctr):
    rr, br = g.rows(RED), g.rows(BLUE)
    k0, k1, k2, k3 = classes
    for a0, (c1, c3) in _mono_sets(rr, br, k0, t, True, True, ctr, [(rr, k1, t), (br, k3, t)]):
        if symmetric:
            # rotations/reflections of the 4-cycle keep validity, so min(A0) is the overall minimum
            hi = _above((a0 & -a0).bit_length() - 1)
            c1 &= hi
            c3 &= hi
            c2_init = k2 & hi
        else:
            c2_init = k2
        for a1, (c2,) in _mono_sets(rr, br, c1, t, True, True, ctr, [(br, c2_init, t)]):
            for a2, (d3,) in _mono_sets(rr, br, c2, t, True, True, ctr, [(rr, c3, t)]):
                for a3, _ in _mono_sets(rr, br, d3, t, True, True, ctr):
                    return AltBlowup(*(tuple(iter_bits(x)) for x in (a0, a1, a2, a3)))
    return None


def find_alt_blowup(
    g: GraphColoring,
    t: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    *,
    within: SetLike | None = None,
    classes: Optional[Sequence[SetLike]] = None,
) -> SearchResult:
    """Lexicographically first alternating blowup with classes of size t.

    ``classes`` optionally gives one candidate set per role A0..A3.
    """
    if not 1 <= 4 * t <= g.n:
        raise ValueError(f"need 1 <= t <= n/4, got t={t}")
    base = _cand(g, within)
    if classes is None:
        ks = (base,) * 4
        symmetric = True
    else:
        ks = tuple(base & to_mask(c) for c in classes)
        symmetric = False
    return _run(budget, lambda ctr: _alt_search(g, t, ks, symmetric, ctr))


# --- local patterns ------------------------------------------------------------------


def find_local_pattern(
    g: GraphColoring, t: int, budget: SearchBudget = DEFAULT_BUDGET, *, within: SetLike | None = None
) -> SearchResult:
    """Induced red K_{t,t}, then induced blue K_{t,t}, then a P_t pattern."""
    if not 1 <= 2 * t <= g.n:
        raise ValueError(f"need 1 <= t <= n/2, got t={t}")
    cand = _cand(g, within)
    size = cand.bit_count()

    def body(ctr):
        if size >= 2 * t:
            for color in (RED, BLUE):
                w = _biclique_search(g, color, t, cand, cand, True, ctr)
                if w is not None:
                    return LocalPattern(w)
        if size >= 4 * t:
            w = _p_search(g, t, cand, ctr)
            if w is not None:
                return LocalPattern(w)
        return None

    return _run(budget, body)


# --- enumeration -----------------------------------------------------------------------


def all_colorings(n: int) -> Iterator[GraphColoring]:
    """Every colouring of K_n, ordered by the red-edge bitmask over lexicographic pairs."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n > 7:
        raise TooLarge(f"all_colorings supports n <= 7, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = [((1 << v), (1 << u)) for u, v in pairs]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            low = m & -m
            m ^= low
            i = low.bit_length() - 1
            u, v = pairs[i]
            bu, bv = bits[i]
            rows[u] |= bu
            rows[v] |= bv
        yield GraphColoring(n, rows, check=False)


# --- building blocks for the extractors -------------------------------------------


def first_mono_set(
    g: GraphColoring,
    cand: int,
    t: int,
    *,
    red: bool = True,
    blue: bool = True,
    sides: Sequence[tuple[Color, int, int]] = (),
    budget: SearchBudget = DEFAULT_BUDGET,
):
    """First t-subset of mask ``cand`` that is a red/blue clique and keeps every
    side constraint ``(color, mask, need)`` satisfied by its common neighbourhood.

    Returns ``(mask, side_masks)``, ``None`` or :class:`Unknown`.
    """
    rr, br = g.rows(RED), g.rows(BLUE)
    sd = [(rr if c is RED else br, m, q) for c, m, q in sides]

    def body(ctr):
        for m, sm in _mono_sets(rr, br, cand, t, red, blue, ctr, sd):
            return m, sm
        return None

    return _run(budget, body)


def max_common_set(
    g: GraphColoring,
    cand: int,
    k: int,
    cross: Color,
    target: int,
    *,
    clique: Optional[str] = None,
    budget: SearchBudget = DEFAULT_BUDGET,
):
    """k-subset of ``cand`` maximising its ``cross``-common neighbourhood inside ``target``.

    ``clique`` restricts the subset to "red", "blue" or "mono" cliques; ``None``
    allows any subset.  Ties go to the lexicographically first subset.  Returns
    ``(mask, common, complete)`` or ``None`` when no admissible subset exists;
    ``complete`` is False if the budget cut the search short (best so far).
    """
    n = g.n
    if clique is None:
        rr = [g.full] * n
        br = rr
        red, blue = True, False
    else:
        rr, br = g.rows(RED), g.rows(BLUE)
        red = clique in ("red", "mono")
        blue = clique in ("blue", "mono")
    xr = g.rows(cross)
    ctr = _Counter(budget.max_nodes)
    best = [-1, 0, 0]

    def rec(chosen, depth, rc, bc, common):
        if depth == k:
            size = common.bit_count()
            if size > best[0]:
                best[:] = [size, chosen, common]
            return
        pool = rc | bc
        need = k - depth
        while pool:
            if pool.bit_count() < need:
                return
            low = pool & -pool
            pool ^= low
            v = low.bit_length() - 1
            ctr.tick()
            nc = common & xr[v]
            if nc.bit_count() <= best[0]:
                continue
            hi = _above(v)
            nrc = rc & rr[v] & hi if rc & low else 0
            nbc = bc & br[v] & hi if bc & low else 0
            rec(chosen | low, depth + 1, nrc, nbc, nc)

    complete = True
    try:
        rec(0, 0, cand if red else 0, cand if blue else 0, target)
    except _OutOfBudget:
        complete = False
    if best[0] < 0:
        return None
    return best[1], best[2], complete
