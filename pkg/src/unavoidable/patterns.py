"""Witness types for every pattern and their certificate checkers.

Checkers cost time proportional to the witness size and are the ground truth
every search and extraction result is tested against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Union

from .errors import FormatError, InvalidVertex, OverlappingSets, SizeMismatch
from .graph import BLUE, RED, Color, GraphColoring, SetLike, iter_bits, mask_of, to_mask


def _norm(s: SetLike) -> tuple[int, ...]:
    if isinstance(s, tuple) and all(a < b for a, b in zip(s, s[1:])):
        return s
    return tuple(iter_bits(to_mask(s)))


@dataclass(frozen=True)
class MonoClique:
    color: Color
    S: tuple[int, ...]
    kind = "mono_clique"

    def __post_init__(self):
        object.__setattr__(self, "S", _norm(self.S))

    def sets(self) -> tuple[tuple[int, ...], ...]:
        return (self.S,)


@dataclass(frozen=True)
class InducedBiclique:
    """``color`` forms exactly K_{t,t} on A|B: cross pairs coloured, both sides opposite-colour cliques."""

    color: Color
    A: tuple[int, ...]
    B: tuple[int, ...]
    kind = "induced_biclique"

    def __post_init__(self):
        object.__setattr__(self, "A", _norm(self.A))
        object.__setattr__(self, "B", _norm(self.B))

    def sets(self):
        return (self.A, self.B)


@dataclass(frozen=True)
class PPattern:
    V1: tuple[int, ...]
    V2: tuple[int, ...]
    V3: tuple[int, ...]
    V4: tuple[int, ...]
    kind = "p_pattern"

    def __post_init__(self):
        for name in ("V1", "V2", "V3", "V4"):
            object.__setattr__(self, name, _norm(getattr(self, name)))

    def sets(self):
        return (self.V1, self.V2, self.V3, self.V4)


@dataclass(frozen=True)
class AltBlowup:
    """Four monochromatic cliques with A0-A1, A2-A3 red and A1-A2, A3-A0 blue."""

    A0: tuple[int, ...]
    A1: tuple[int, ...]
    A2: tuple[int, ...]
    A3: tuple[int, ...]
    kind = "alt_blowup"

    def __post_init__(self):
        for name in ("A0", "A1", "A2", "A3"):
            object.__setattr__(self, name, _norm(getattr(self, name)))

    def sets(self):
        return (self.A0, self.A1, self.A2, self.A3)


@dataclass(frozen=True)
class LocalPattern:
    inner: Union[InducedBiclique, PPattern]
    kind = "local_pattern"

    def sets(self):
        return self.inner.sets()


Witness = Union[MonoClique, InducedBiclique, PPattern, AltBlowup, LocalPattern]


# --- helpers on masks ------------------------------------------------------


def _validate(g: GraphColoring, masks: list[int], equal: bool = True) -> None:
    seen = 0
    for m in masks:
        if m & ~g.full:
            raise InvalidVertex(f"witness uses vertices outside 0..{g.n - 1}")
        if m & seen:
            raise OverlappingSets("witness sets must be pairwise disjoint")
        seen |= m
    sizes = {m.bit_count() for m in masks}
    if 0 in sizes:
        raise SizeMismatch("witness sets must be non-empty")
    if equal and len(sizes) != 1:
        raise SizeMismatch(f"witness sets must have equal size, got {sorted(m.bit_count() for m in masks)}")


def is_clique(g: GraphColoring, color: Color, m: int) -> bool:
    for v in iter_bits(m):
        rest = m ^ (1 << v)
        if g.row(color, v) & rest != rest:
            return False
    return True


def is_mono(g: GraphColoring, m: int) -> bool:
    return m.bit_count() <= 1 or is_clique(g, RED, m) or is_clique(g, BLUE, m)


def all_cross(g: GraphColoring, color: Color, a: int, b: int) -> bool:
    for v in iter_bits(a):
        if g.row(color, v) & b != b:
            return False
    return True


# --- verifiers -------------------------------------------------------------


def verify_mono_clique(g: GraphColoring, color: Color, S: SetLike) -> bool:
    m = to_mask(S)
    _validate(g, [m])
    return is_clique(g, color, m)


def verify_induced_biclique(g: GraphColoring, color: Color, A: SetLike, B: SetLike) -> bool:
    a, b = to_mask(A), to_mask(B)
    _validate(g, [a, b])
    other = color.opposite
    return all_cross(g, color, a, b) and is_clique(g, other, a) and is_clique(g, other, b)


def verify_p_pattern(g: GraphColoring, V1: SetLike, V2: SetLike, V3: SetLike, V4: SetLike) -> bool:
    v1, v2, v3, v4 = (to_mask(x) for x in (V1, V2, V3, V4))
    _validate(g, [v1, v2, v3, v4])
    return (
        is_clique(g, RED, v1 | v2)
        and is_clique(g, BLUE, v3 | v4)
        and all_cross(g, RED, v1, v3)
        and all_cross(g, RED, v2, v4)
        and all_cross(g, BLUE, v1, v4)
        and all_cross(g, BLUE, v2, v3)
    )


def verify_alt_blowup(g: GraphColoring, A0: SetLike, A1: SetLike, A2: SetLike, A3: SetLike) -> bool:
    a = [to_mask(x) for x in (A0, A1, A2, A3)]
    _validate(g, a)
    return (
        all(is_mono(g, m) for m in a)
        and all_cross(g, RED, a[0], a[1])
        and all_cross(g, BLUE, a[1], a[2])
        and all_cross(g, RED, a[2], a[3])
        and all_cross(g, BLUE, a[3], a[0])
    )


def verify_local_pattern(g: GraphColoring, w: LocalPattern, t: int) -> bool:
    inner = w.inner
    if any(len(s) != t for s in inner.sets()):
        raise SizeMismatch(f"local pattern sets must have size t={t}")
    if isinstance(inner, InducedBiclique):
        return verify_induced_biclique(g, inner.color, inner.A, inner.B)
    if isinstance(inner, PPattern):
        return verify_p_pattern(g, *inner.sets())
    raise TypeError(f"local pattern cannot wrap {type(inner).__name__}")


def verify_witness(g: GraphColoring, w: Witness, t: int | None = None) -> bool:
    """Dispatch to the checker for ``w``; ``t`` (if given) also pins the set size."""
    if t is not None and any(len(s) != t for s in w.sets()) and not isinstance(w, MonoClique):
        raise SizeMismatch(f"witness sets must have size t={t}")
    if isinstance(w, MonoClique):
        if t is not None and len(w.S) != t:
            raise SizeMismatch(f"clique must have size t={t}")
        return verify_mono_clique(g, w.color, w.S)
    if isinstance(w, InducedBiclique):
        return verify_induced_biclique(g, w.color, w.A, w.B)
    if isinstance(w, PPattern):
        return verify_p_pattern(g, *w.sets())
    if isinstance(w, AltBlowup):
        return verify_alt_blowup(g, *w.sets())
    if isinstance(w, LocalPattern):
        return verify_local_pattern(g, w, len(w.sets()[0]) if t is None else t)
    raise TypeError(f"not a witness: {w!r}")


# --- JSON ------------------------------------------------------------------


def witness_to_dict(w: Witness) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": w.kind}
    inner = w.inner if isinstance(w, LocalPattern) else w
    if isinstance(w, LocalPattern):
        out["inner"] = inner.kind
    if isinstance(inner, (MonoClique, InducedBiclique)):
        out["color"] = inner.color.value
    out["sets"] = [list(s) for s in w.sets()]
    return out


def witness_to_json(w: Witness) -> str:
    return json.dumps(witness_to_dict(w), sort_keys=False)


_SET_COUNTS = {"mono_clique": 1, "induced_biclique": 2, "p_pattern": 4, "alt_blowup": 4}


def witness_from_dict(d: Any) -> Witness:
    if not isinstance(d, dict):
        raise FormatError("witness JSON must be an object")
    kind = d.get("kind")
    sets = d.get("sets")
    if not isinstance(sets, list) or not all(
        isinstance(s, list) and all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in s)
        for s in sets
    ):
        raise FormatError("'sets' must be a list of lists of non-negative ints")
    for s in sets:
        if len(set(s)) != len(s):
            raise FormatError("duplicate vertex inside a witness set")
    if kind == "local_pattern":
        inner_kind = d.get("inner") or {2: "induced_biclique", 4: "p_pattern"}.get(len(sets))
        if inner_kind not in ("induced_biclique", "p_pattern"):
            raise FormatError("local_pattern must wrap induced_biclique or p_pattern")
        inner = witness_from_dict({**d, "kind": inner_kind})
        return LocalPattern(inner)  # type: ignore[arg-type]
    if kind not in _SET_COUNTS:
        raise FormatError(f"unknown witness kind {kind!r}")
    if len(sets) != _SET_COUNTS[kind]:
        raise FormatError(f"{kind} needs {_SET_COUNTS[kind]} sets, got {len(sets)}")
    tupled = [tuple(sorted(s)) for s in sets]
    if kind in ("mono_clique", "induced_biclique"):
        try:
            color = Color.parse(str(d.get("color", "")))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if kind == "mono_clique":
            return MonoClique(color, tupled[0])
        return InducedBiclique(color, tupled[0], tupled[1])
    if kind == "p_pattern":
        return PPattern(*tupled)
    return AltBlowup(*tupled)


def witness_from_json(text: str) -> Witness:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    return witness_from_dict(d)


__all__ = [
    "AltBlowup",
    "InducedBiclique",
    "LocalPattern",
    "MonoClique",
    "PPattern",
    "Witness",
    "all_cross",
    "is_clique",
    "is_mono",
    "mask_of",
    "verify_alt_blowup",
    "verify_induced_biclique",
    "verify_local_pattern",
    "verify_mono_clique",
    "verify_p_pattern",
    "verify_witness",
    "witness_from_dict",
    "witness_from_json",
    "witness_to_dict",
    "witness_to_json",
]
