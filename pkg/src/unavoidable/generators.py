"""Colouring generators: the four-block family, its randomised tightness
perturbation, and seeded random colourings with a minimum-degree guarantee.

All randomness is drawn from ``random.Random(seed)`` with exact rational
Bernoulli trials (``randrange(q) < p`` for probability ``p/q``), so outputs are
reproducible across platforms.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Any, Optional, Union

from .errors import PreconditionFailed, RepairExhausted, TooLarge
from .exact import Rational, as_fraction, ceil_root_power, fmt_fraction
from .graph import BLUE, MAX_N, RED, GraphColoring, VertexSet


def _bernoulli(rng: random.Random, p: Fraction) -> bool:
    return rng.randrange(p.denominator) < p.numerator


def p_parts(m: int) -> tuple[VertexSet, VertexSet, VertexSet, VertexSet]:
    return tuple(VertexSet.range(i * m, (i + 1) * m) for i in range(4))  # type: ignore[return-value]


def gen_p_pattern(m: int) -> tuple[GraphColoring, tuple[VertexSet, VertexSet, VertexSet, VertexSet]]:
    """The canonical member of the four-block family on 4m vertices, with its parts."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if 4 * m > MAX_N:
        raise TooLarge(f"4m={4 * m} exceeds {MAX_N}")
    parts = p_parts(m)
    v1, v2, v3, v4 = (p.mask for p in parts)
    red_of = {0: v1 | v2 | v3, 1: v1 | v2 | v4, 2: v1, 3: v2}
    rows = []
    for v in range(4 * m):
        rows.append(red_of[v // m] & ~(1 << v))
    return GraphColoring(4 * m, rows, check=False), parts


def tightness_part_size(eps: Rational, t: int) -> int:
    """``ceil(eps ** (-t/4))``, exactly."""
    eps = as_fraction(eps)
    return ceil_root_power(1 / eps, t, 4)


def gen_tightness(eps: Rational, t: int, recolor_p: Optional[Rational] = None, seed: int = 0) -> GraphColoring:
    """Four-block colouring with part size ``ceil(eps**(-t/4))`` and random recolouring.

    Every pair inside V1 u V2 turns blue, and every pair inside V3 u V4 turns
    red, independently with probability ``recolor_p`` (default ``3*eps``).
    """
    eps = as_fraction(eps)
    if not 0 < eps <= Fraction(1, 4):
        raise ValueError(f"need 0 < eps <= 1/4, got {eps}")
    p = 3 * eps if recolor_p is None else as_fraction(recolor_p)
    if not 0 <= p <= 1:
        raise ValueError(f"recolor_p must lie in [0, 1], got {p}")
    m = tightness_part_size(eps, t)
    if 4 * m > MAX_N:
        raise TooLarge(f"part size {m} gives {4 * m} > {MAX_N} vertices")
    g, _ = gen_p_pattern(m)
    if p == 0:
        return g
    rng = random.Random(seed)
    rows = list(g.red)
    n = 4 * m
    for u in range(n):
        for v in range(u + 1, n):
            same_half = (u < 2 * m) == (v < 2 * m)
            if same_half and _bernoulli(rng, p):
                rows[u] ^= 1 << v
                rows[v] ^= 1 << u
    return GraphColoring(n, rows, check=False)


def gen_uniform(n: int, p: Rational, seed: int = 0) -> GraphColoring:
    """Each pair red independently with probability p."""
    p = as_fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if _bernoulli(rng, p):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return GraphColoring(n, rows, check=False)


def gen_random_min_degree(
    n: int, delta: Rational, seed: int = 0, max_repair_rounds: Optional[int] = None
) -> GraphColoring:
    """Uniform colouring repaired until every vertex has >= delta*n neighbours in each colour.

    Repair takes the lowest deficient vertex and flips one of its opposite-colour
    pairs, chosen uniformly among partners that can spare an opposite-colour edge.
    """
    delta = as_fraction(delta)
    if not 0 < delta < Fraction(1, 2):
        raise ValueError(f"need 0 < delta < 1/2, got {delta}")
    if 2 * delta * n > n - 1:
        raise PreconditionFailed("2*delta*n > n-1: both colours cannot reach delta*n", n=n, delta=str(delta))
    need = math.ceil(delta * n)
    cap = 4 * n * n if max_repair_rounds is None else max_repair_rounds
    rng = random.Random(seed)
    g = gen_uniform(n, Fraction(1, 2), rng.getrandbits(64))
    full = g.full
    red = list(g.red)

    def row(c, v):
        return red[v] if c is RED else full ^ red[v] ^ (1 << v)

    flips = 0
    while True:
        bad = None
        for v in range(n):
            dr = red[v].bit_count()
            if dr < need:
                bad = (v, RED)
                break
            if n - 1 - dr < need:
                bad = (v, BLUE)
                break
        if bad is None:
            return GraphColoring(n, red, check=False)
        if flips >= cap:
            raise RepairExhausted(cap, bad[0])
        v, c = bad
        o = c.opposite
        partners = row(o, v)
        spare = [u for u in _bits(partners) if row(o, u).bit_count() > need]
        pool = spare or list(_bits(partners))
        u = pool[rng.randrange(len(pool))]
        red[u] ^= 1 << v
        red[v] ^= 1 << u
        flips += 1


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


# --- generator specs ----------------------------------------------------------


@dataclass(frozen=True)
class PPatternSpec:
    m: int
    kind: str = field(default="p_pattern", init=False)

    def label(self) -> str:
        return f"p_pattern(m={self.m})"

    def build(self, seed: Optional[int] = None) -> GraphColoring:
        return gen_p_pattern(self.m)[0]


@dataclass(frozen=True)
class TightnessSpec:
    eps: Fraction
    t: int
    recolor_p: Optional[Fraction] = None
    seed: int = 0
    kind: str = field(default="tightness", init=False)

    def label(self) -> str:
        p = "3eps" if self.recolor_p is None else fmt_fraction(self.recolor_p)
        return f"tightness(eps={fmt_fraction(self.eps)},t={self.t},p={p})"

    def build(self, seed: Optional[int] = None) -> GraphColoring:
        return gen_tightness(self.eps, self.t, self.recolor_p, self.seed if seed is None else seed)


@dataclass(frozen=True)
class RandomMinDegreeSpec:
    n: int
    delta: Fraction
    seed: int = 0
    max_repair_rounds: Optional[int] = None
    kind: str = field(default="random_min_degree", init=False)

    def label(self) -> str:
        return f"random_min_degree(n={self.n},delta={fmt_fraction(self.delta)})"

    def build(self, seed: Optional[int] = None) -> GraphColoring:
        return gen_random_min_degree(self.n, self.delta, self.seed if seed is None else seed, self.max_repair_rounds)


@dataclass(frozen=True)
class UniformSpec:
    n: int
    p: Fraction
    seed: int = 0
    kind: str = field(default="uniform", init=False)

    def label(self) -> str:
        return f"uniform(n={self.n},p={fmt_fraction(self.p)})"

    def build(self, seed: Optional[int] = None) -> GraphColoring:
        return gen_uniform(self.n, self.p, self.seed if seed is None else seed)


GenSpec = Union[PPatternSpec, TightnessSpec, RandomMinDegreeSpec, UniformSpec]

_RATIONAL_FIELDS = {"eps", "recolor_p", "delta", "p"}


def spec_from_dict(d: dict[str, Any]) -> GenSpec:
    """Parse a GenSpec JSON object; rationals may be ``"p/q"`` strings or numbers."""
    d = dict(d)
    kind = d.pop("kind", None)
    cls = {
        "p_pattern": PPatternSpec,
        "tightness": TightnessSpec,
        "random_min_degree": RandomMinDegreeSpec,
        "uniform": UniformSpec,
    }.get(kind)
    if cls is None:
        raise ValueError(f"unknown generator kind {kind!r}")
    for k in list(d):
        if k in _RATIONAL_FIELDS and d[k] is not None:
            d[k] = as_fraction(d[k])
    try:
        return cls(**d)
    except TypeError as exc:
        raise ValueError(f"bad fields for {kind}: {exc}") from None


def spec_to_dict(spec: GenSpec) -> dict[str, Any]:
    out = {}
    for k, v in asdict(spec).items():
        out[k] = fmt_fraction(v) if isinstance(v, Fraction) else v
    return out


def with_seed(spec: GenSpec, seed: int) -> GenSpec:
    if isinstance(spec, PPatternSpec):
        return spec
    return replace(spec, seed=seed)
