"""Induced K_{t,t} under the n/4 + eps*n minimum degree condition.

The pipeline grows a family of disjoint blocks: red blocks free of red K_t
and blue blocks free of blue K_t.  Same-colour block pairs must be sparse in
that colour (or they host an induced biclique), and while the uncovered set Z
is large some block sends many of its own colour into Z, which mints a new
opposite block there.  Every new block is certified free of its colour's
K_t, because such a clique would close an induced biclique with the block's
parent clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..errors import DichotomyGap, PreconditionFailed
from ..exact import Rational, as_fraction
from ..graph import BLUE, RED, Color, DegreeThreshold, GraphColoring, VertexSet, iter_bits
from ..patterns import InducedBiclique, MonoClique, verify_induced_biclique
from ..search import Unknown, find_induced_biclique, find_mono_clique, max_common_set
from .lemmas import _cross_count, _vs, _first_k, kst_subset, mono_clique_in, sparse_pair_or_biclique
from .params import ExtractionResult, ExtractionTrace, ExtractorParams, FailureReport


@dataclass
class BlockFamily:
    """Disjoint red blocks (no red K_t) and blue blocks (no blue K_t)."""

    n: int
    red_blocks: list[int] = field(default_factory=list)
    blue_blocks: list[int] = field(default_factory=list)

    def blocks(self, color: Color) -> list[int]:
        return self.red_blocks if color is RED else self.blue_blocks

    def family_union(self, color: Color) -> int:
        out = 0
        for b in self.blocks(color):
            out |= b
        return out

    @property
    def residual(self) -> int:
        return ((1 << self.n) - 1) & ~(self.family_union(RED) | self.family_union(BLUE))

    def sizes(self) -> dict[str, int]:
        return {
            "m_r": len(self.red_blocks),
            "m_b": len(self.blue_blocks),
            "X_r": self.family_union(RED).bit_count(),
            "X_b": self.family_union(BLUE).bit_count(),
            "Z": self.residual.bit_count(),
        }


class _Found(Exception):
    def __init__(self, witness: InducedBiclique):
        self.witness = witness


def _clique_in_block(g, block, color, t, budget):
    """A ``color`` t-clique inside the block, None, or Unknown."""
    if block.bit_count() < t:
        return None
    return find_mono_clique(g, color, t, budget, within=VertexSet.from_mask(block))


def _mint(g, parent: MonoClique, common: int, t: int, cap: int, budget, trace, label) -> int:
    """Turn the ``common`` neighbourhood of ``parent`` into a block, or raise _Found.

    ``parent`` is a clique of colour c whose vertices all see ``common`` in the
    opposite colour o; a c-clique of size t inside ``common`` is then an induced
    o-biclique, so the new block is free of such cliques.
    """
    c = parent.color
    o = c.opposite
    hit = _clique_in_block(g, common, c, t, budget)
    if isinstance(hit, MonoClique):
        w = InducedBiclique(o, parent.S, hit.S)
        trace.add(label, f"{c.value} K_{t} in common neighbourhood gives induced {o.value} biclique",
                  parent=len(parent.S), common=common.bit_count())
        raise _Found(w)
    if isinstance(hit, Unknown):
        # uncertified blocks are dropped rather than risked
        trace.add(label, "block certification budget exhausted", common=common.bit_count())
        return 0
    block = _first_k(common, cap)
    trace.add(label, f"new {c.value}-free block", parent=len(parent.S), common=common.bit_count(),
              block=block.bit_count())
    return block


def _best_parent(g, host: int, t: int, cross: Color, target: int, clique: Color, budget):
    """``clique``-coloured t-clique in host with the largest ``cross``-common neighbourhood in target."""
    got = max_common_set(g, host, t, cross, target, clique=clique.value, budget=budget)
    if got is None:
        return None
    s, common, _ = got
    return MonoClique(clique, tuple(iter_bits(s))), common


def _seed(g: GraphColoring, t: int, params: ExtractorParams, fam: BlockFamily, trace: ExtractionTrace) -> None:
    """First red-free block and first blue-free block."""
    budget = params.budget
    full = g.full
    K = None
    for q in range(max(params.clique_target, t), t - 1, -1):
        K = mono_clique_in(g, full, q, budget)
        if K is not None:
            break
    if K is None:
        raise PreconditionFailed("no monochromatic clique of size t found", t=t)
    trace.add("ramsey_pivot", f"{K.color.value} clique seed", K=len(K.S), t=t)
    c, o = K.color, K.color.opposite
    kmask = sum(1 << v for v in K.S)
    rest = full & ~kmask
    # t-subset of K with the largest o-common neighbourhood: KST when its bound applies
    edges = _cross_count(g, o, kmask, rest)
    alpha = Fraction(edges, len(K.S) * rest.bit_count())
    if alpha > 0 and alpha * len(K.S) >= t:
        S, N = kst_subset(g, VertexSet.from_mask(kmask), VertexSet.from_mask(rest), o, t, alpha, trace, budget)
        sub, common = S.mask, N.mask
    else:
        sub, common, _ = max_common_set(g, kmask, t, o, rest, budget=budget)
        trace.add("kst_greedy", "exact (bound inapplicable)", alpha, A=len(K.S), B=rest.bit_count(), N=common.bit_count())
    parent = MonoClique(c, tuple(iter_bits(sub)))
    first = _mint(g, parent, common, t, params.block_size, budget, trace, "block_seed")
    if not first:
        return
    fam.blocks(c).append(first)
    # second block: an o-clique inside the first block with a large c-common neighbourhood outside it
    got = _best_parent(g, first, t, c, full & ~first, o, budget)
    if got is None:
        trace.add("block_seed", f"no {o.value} K_{t} inside first block", block=first.bit_count())
        return
    parent2, common2 = got
    second = _mint(g, parent2, common2, t, params.block_size, budget, trace, "block_seed")
    if second:
        fam.blocks(o).append(second)


def _check_pairs(g, fam, t, threshold, checked, budget, trace):
    """Run the dichotomy on every unchecked same-colour block pair."""
    for color in (RED, BLUE):
        blocks = fam.blocks(color)
        for j in range(len(blocks)):
            for i in range(j):
                key = (color, i, j)
                if key in checked:
                    continue
                checked.add(key)
                try:
                    out = sparse_pair_or_biclique(g, _vs(blocks[i]), _vs(blocks[j]), t, threshold, color=color, budget=budget)
                except DichotomyGap as gap:
                    trace.add("block_pair", f"{color.value} pair dense without biclique", gap.density,
                              i=i, j=j)
                    continue
                except PreconditionFailed as exc:
                    trace.add("block_pair", f"skipped: {exc}", i=i, j=j)
                    continue
                if isinstance(out, InducedBiclique):
                    trace.add("block_pair", f"{color.value} pair dense: biclique", i=i, j=j)
                    raise _Found(out)
                trace.add("block_pair", f"{color.value} pair sparse", out.density, i=i, j=j)


def _final_counting(g, fam, trace) -> dict[str, Fraction]:
    n = g.n
    xr, xb = fam.family_union(RED), fam.family_union(BLUE)
    er = _cross_count(g, RED, xr, xb)
    eb = _cross_count(g, BLUE, xr, xb)
    dens = {}
    if xr and xb:
        dens = {"red_XrXb": Fraction(er, xr.bit_count() * xb.bit_count()),
                "blue_XrXb": Fraction(eb, xr.bit_count() * xb.bit_count())}
    red_holds = 4 * er > n * xr.bit_count()
    blue_holds = 4 * eb > n * xb.bit_count()
    trace.add("final_counting", f"red inequality {'holds' if red_holds else 'fails'}, "
              f"blue inequality {'holds' if blue_holds else 'fails'}",
              e_red=er, e_blue=eb, X_r=xr.bit_count(), X_b=xb.bit_count())
    return dens


def extract_theorem1(
    g: GraphColoring,
    eps: Rational,
    t: int,
    params: Optional[ExtractorParams] = None,
) -> ExtractionResult:
    """Induced K_{t,t} in some colour, or a :class:`FailureReport` with the evidence."""
    eps = as_fraction(eps)
    if t < 1:
        raise ValueError("t must be >= 1")
    params = (params or ExtractorParams()).resolved(t, eps)
    budget = params.budget
    trace = ExtractionTrace()
    n = g.n
    if not g.min_degree_ok(DegreeThreshold.quarter_plus(eps)):
        trace.add("precondition", "minimum degree below n/4 + eps*n")
        raise PreconditionFailed("minimum degree below n/4 + eps*n in some colour", eps=str(eps),
                                 red=g.min_degree(RED), blue=g.min_degree(BLUE))
    trace.add("precondition", "ok", n=n, t=t)
    fam = BlockFamily(n)
    checked: set = set()
    rounds = 0
    try:
        _seed(g, t, params, fam, trace)
        z_floor = eps * eps * n
        while rounds < params.max_rounds:
            rounds += 1
            _check_pairs(g, fam, t, params.sparse_threshold, checked, budget, trace)
            z = fam.residual
            if z.bit_count() < z_floor or not z:
                trace.add("block_claim", "residual below eps^2 n", **fam.sizes())
                break
            if not _grow(g, fam, t, eps, z, params, trace):
                break
    except _Found as found:
        w = found.witness
        assert verify_induced_biclique(g, w.color, w.A, w.B)
        trace.add("success", f"induced {w.color.value} K_{t},{t}")
        return ExtractionResult(w, trace, rounds=rounds)

    densities = _final_counting(g, fam, trace)
    oracle = "skipped"
    if n <= params.oracle_cap and 2 * t <= n:
        for color in (RED, BLUE):
            got = find_induced_biclique(g, color, t, budget)
            if isinstance(got, InducedBiclique):
                trace.add("oracle_fallback", f"found induced {color.value} biclique", n=n)
                trace.add("success", "via oracle fallback")
                return ExtractionResult(got, trace, rounds=rounds, via="oracle_fallback")
            if isinstance(got, Unknown):
                oracle = "unknown"
        oracle = oracle if oracle == "unknown" else "none"
        trace.add("oracle_fallback", oracle, n=n)
    trace.add("failure", "block family exhausted without a witness", **fam.sizes())
    report = FailureReport("block family exhausted", trace, fam.sizes(), densities, oracle)
    return ExtractionResult(None, trace, report, rounds=rounds, via="none")


def _grow(g, fam, t, eps, z, params, trace) -> bool:
    """Claim step: mint one opposite block inside Z; False when no block qualifies."""
    zc = z.bit_count()
    candidates = []
    for color in (RED, BLUE):
        for idx, block in enumerate(fam.blocks(color)):
            e = _cross_count(g, color, block, z)
            # e_c(S, Z) >= eps |S| |Z| / 2
            if 2 * e >= eps * block.bit_count() * zc:
                candidates.append((-Fraction(e, block.bit_count() * zc), color.value, idx, color, block))
    candidates.sort(key=lambda c: c[:3])
    if not candidates:
        trace.add("block_claim", "no block sends eps/2 of its colour into Z", **fam.sizes())
        return False
    for neg, _, idx, color, block in candidates:
        trace.add("block_claim", f"{color.value} block {idx} qualifies", -neg, block=block.bit_count(), Z=zc)
        # a c-block is free of c-cliques, so its o-cliques are the parents
        got = _best_parent(g, block, t, color, z, color.opposite, params.budget)
        if got is None or not got[1]:
            trace.add("block_growth", f"no {color.opposite.value} K_{t} with common neighbours in Z", block=block.bit_count())
            continue
        parent, common = got
        new = _mint(g, parent, common, t, params.block_size, params.budget, trace, "block_growth")
        if new:
            fam.blocks(color.opposite).append(new)
            return True
    return False
