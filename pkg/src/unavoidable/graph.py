"""Immutable 2-edge-coloured complete graphs.

Vertex sets are bitmasks over ``0..n-1``; only red adjacency is stored and a
pair is blue exactly when it is not red.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import (
    DuplicatePair,
    FormatError,
    InvalidVertex,
    OverlappingSets,
    SelfLoop,
    TooLarge,
    TooSmall,
)
from .exact import Rational, as_fraction

MAX_N = 4096


class Color(enum.Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def opposite(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    @property
    def letter(self) -> str:
        return "R" if self is Color.RED else "B"

    @classmethod
    def parse(cls, text: str) -> "Color":
        key = text.strip().lower()
        if key in ("r", "red"):
            return cls.RED
        if key in ("b", "blue"):
            return cls.BLUE
        raise ValueError(f"unknown colour {text!r}")


RED = Color.RED
BLUE = Color.BLUE


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for v in items:
        m |= 1 << v
    return m


class VertexSet:
    """Immutable set of vertex ids backed by an int bitmask."""

    __slots__ = ("mask",)

    def __init__(self, items: Iterable[int] = ()):
        m = 0
        for v in items:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidVertex(f"bad vertex id {v!r}")
            m |= 1 << v
        self.mask = m

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        s = cls.__new__(cls)
        s.mask = mask
        return s

    @classmethod
    def range(cls, start: int, stop: int) -> "VertexSet":
        return cls.from_mask(((1 << stop) - 1) ^ ((1 << start) - 1))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return bool(self.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & to_mask(other))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | to_mask(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~to_mask(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask ^ to_mask(other))

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~to_mask(other) == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset, list, tuple)):
            try:
                return self.mask == mask_of(other)
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({list(self)})"

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & to_mask(other) == 0

    def min(self) -> int:
        if not self.mask:
            raise ValueError("empty set")
        return (self.mask & -self.mask).bit_length() - 1

    def max(self) -> int:
        if not self.mask:
            raise ValueError("empty set")
        return self.mask.bit_length() - 1

    def sorted(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))


SetLike = Union[VertexSet, Iterable[int]]


def to_mask(s: SetLike) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        raise TypeError("pass a VertexSet or an iterable of vertex ids, not a bare int")
    return VertexSet(s).mask


class ThresholdKind(enum.Enum):
    QUARTER_PLUS = "quarter_plus"
    LINEAR = "linear"


@dataclass(frozen=True)
class DegreeThreshold:
    """Minimum-degree hypothesis: ``n/4 + eps*n`` (QUARTER_PLUS) or ``eps*n`` (LINEAR)."""

    kind: ThresholdKind
    eps: Fraction

    def __post_init__(self):
        eps = as_fraction(self.eps)
        object.__setattr__(self, "eps", eps)
        cap = Fraction(1, 4) if self.kind is ThresholdKind.QUARTER_PLUS else Fraction(1, 2)
        if not 0 < eps < cap:
            raise ValueError(f"{self.kind.value} threshold needs 0 < eps < {cap}, got {eps}")

    @classmethod
    def quarter_plus(cls, eps: Rational) -> "DegreeThreshold":
        return cls(ThresholdKind.QUARTER_PLUS, as_fraction(eps))

    @classmethod
    def linear(cls, eps: Rational) -> "DegreeThreshold":
        return cls(ThresholdKind.LINEAR, as_fraction(eps))

    def bound(self, n: int) -> Fraction:
        if self.kind is ThresholdKind.QUARTER_PLUS:
            return Fraction(n, 4) + self.eps * n
        return self.eps * n


class GraphColoring:
    """A red/blue colouring of K_n, stored as red adjacency bitmasks."""

    __slots__ = ("n", "red", "full")

    def __init__(self, n: int, red_rows: Iterable[int], *, check: bool = True):
        if n < 2:
            raise TooSmall(f"need n >= 2, got {n}")
        if n > MAX_N:
            raise TooLarge(f"n={n} exceeds {MAX_N}")
        rows = tuple(red_rows)
        full = (1 << n) - 1
        if check:
            if len(rows) != n:
                raise ValueError("need one adjacency row per vertex")
            for v, row in enumerate(rows):
                if row & ~full or row >> v & 1:
                    raise ValueError(f"row {v} out of range or reflexive")
                for u in iter_bits(row):
                    if not rows[u] >> v & 1:
                        raise ValueError(f"asymmetric pair {{{u},{v}}}")
        self.n = n
        self.red = rows
        self.full = full

    def __setattr__(self, name, value):
        if hasattr(self, "full"):
            raise AttributeError("GraphColoring is immutable")
        object.__setattr__(self, name, value)

    # construction -------------------------------------------------------

    @classmethod
    def from_red_edges(cls, n: int, red_pairs: Iterable[tuple[int, int]]) -> "GraphColoring":
        if n < 2:
            raise TooSmall(f"need n >= 2, got {n}")
        if n > MAX_N:
            raise TooLarge(f"n={n} exceeds {MAX_N}")
        rows = [0] * n
        for pair in red_pairs:
            u, v = pair
            for x in (u, v):
                if not isinstance(x, int) or not 0 <= x < n:
                    raise InvalidVertex(f"vertex {x!r} not in 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"pair {{{u},{v}}} is a loop")
            if rows[u] >> v & 1:
                raise DuplicatePair(f"pair {{{min(u, v)},{max(u, v)}}} listed twice")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    @classmethod
    def monochromatic(cls, n: int, color: Color) -> "GraphColoring":
        full = (1 << n) - 1
        if color is RED:
            return cls(n, [full ^ (1 << v) for v in range(n)], check=False)
        return cls(n, [0] * n, check=False)

    # queries --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    def _check_mask(self, m: int) -> int:
        if m & ~self.full:
            raise InvalidVertex(f"set contains vertices outside 0..{self.n - 1}")
        return m

    def row(self, color: Color, v: int) -> int:
        """Bitmask of ``color``-neighbours of ``v`` (no validation)."""
        r = self.red[v]
        return r if color is RED else self.full ^ r ^ (1 << v)

    def rows(self, color: Color) -> list[int]:
        if color is RED:
            return list(self.red)
        full = self.full
        return [full ^ r ^ (1 << v) for v, r in enumerate(self.red)]

    def color_of(self, u: int, v: int) -> Color:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"no edge {{{u},{v}}}")
        return RED if self.red[u] >> v & 1 else BLUE

    def neighbors(self, color: Color, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet.from_mask(self.row(color, v))

    def degree(self, color: Color, v: int, within: SetLike | None = None) -> int:
        self._check_vertex(v)
        r = self.row(color, v)
        if within is not None:
            r &= self._check_mask(to_mask(within))
        return r.bit_count()

    def degrees(self, color: Color) -> list[int]:
        return [r.bit_count() for r in self.rows(color)]

    def pair_count(self, color: Color, A: SetLike, B: SetLike | None = None) -> int:
        """Number of ``color`` pairs between disjoint A and B, or inside A when B is None."""
        a = self._check_mask(to_mask(A))
        if B is None:
            total = sum((self.red[v] & a).bit_count() for v in iter_bits(a)) // 2
            if color is RED:
                return total
            k = a.bit_count()
            return k * (k - 1) // 2 - total
        b = self._check_mask(to_mask(B))
        if a & b:
            raise OverlappingSets("pair_count needs disjoint sets")
        red = sum((self.red[v] & b).bit_count() for v in iter_bits(a))
        if color is RED:
            return red
        return a.bit_count() * b.bit_count() - red

    def common_mask(self, color: Color, s: int) -> int:
        """Mask form of :meth:`common_neighbors`; the empty set maps to all vertices."""
        m = self.full
        for v in iter_bits(s):
            m &= self.row(color, v)
        return m

    def common_neighbors(self, color: Color, S: SetLike) -> VertexSet:
        return VertexSet.from_mask(self.common_mask(color, self._check_mask(to_mask(S))))

    def min_degree(self, color: Color) -> int:
        return min(self.degrees(color))

    def min_degree_ok(self, th: DegreeThreshold) -> bool:
        bound = th.bound(self.n)
        return min(self.min_degree(RED), self.min_degree(BLUE)) >= bound

    def induced(self, S: SetLike) -> tuple["GraphColoring", tuple[int, ...]]:
        """Colouring on S relabelled in increasing order, plus the new-to-old index map."""
        verts = tuple(iter_bits(self._check_mask(to_mask(S))))
        if len(verts) < 2:
            raise TooSmall("induced subgraph needs at least 2 vertices")
        rows = []
        for v in verts:
            r = self.red[v]
            rows.append(mask_of(i for i, u in enumerate(verts) if r >> u & 1))
        return GraphColoring(len(verts), rows, check=False), verts

    def swap_colors(self) -> "GraphColoring":
        return GraphColoring(self.n, self.rows(BLUE), check=False)

    def red_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.red[u] >> (u + 1) << (u + 1))]

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_mask(self.full)

    # serialization ----------------------------------------------------------

    def encode(self) -> str:
        return encode(self)

    @classmethod
    def decode(cls, text: str) -> "GraphColoring":
        return decode(text)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphColoring):
            return NotImplemented
        return self.n == other.n and self.red == other.red

    def __hash__(self) -> int:
        return hash((self.n, self.red))

    def __repr__(self) -> str:
        return f"GraphColoring(n={self.n}, red_edges={sum(r.bit_count() for r in self.red) // 2})"


from_red_edges = GraphColoring.from_red_edges

_HEADER = re.compile(r"UPC1 ([1-9][0-9]*)")


def encode(g: GraphColoring) -> str:
    """Canonical UPC text: header, then one R/B line per vertex 0..n-2 for its higher pairs."""
    out = [f"UPC1 {g.n}\n"]
    for i in range(g.n - 1):
        r = g.red[i]
        out.append("".join("R" if r >> j & 1 else "B" for j in range(i + 1, g.n)))
        out.append("\n")
    return "".join(out)


def decode(text: str) -> GraphColoring:
    if not isinstance(text, str):
        raise FormatError("UPC input must be text")
    if not text.endswith("\n"):
        lines_so_far = text.count("\n") + 1
        raise FormatError("missing final newline", lines_so_far, len(text.rsplit("\n", 1)[-1]) + 1)
    lines = text[:-1].split("\n")
    m = _HEADER.fullmatch(lines[0])
    if not m:
        raise FormatError(f"bad header {lines[0]!r}, expected 'UPC1 <n>'", 1, 1)
    n = int(m.group(1))
    if n < 2:
        raise FormatError("n must be at least 2", 1, 6)
    if n > MAX_N:
        raise FormatError(f"n={n} exceeds {MAX_N}", 1, 6)
    if len(lines) != n:
        raise FormatError(f"expected {n - 1} edge lines, found {len(lines) - 1}", min(len(lines), n) + 1, 1)
    rows = [0] * n
    for i in range(n - 1):
        line = lines[i + 1]
        want = n - 1 - i
        for j, ch in enumerate(line):
            if ch == "R":
                if j < want:
                    v = i + 1 + j
                    rows[i] |= 1 << v
                    rows[v] |= 1 << i
            elif ch != "B":
                raise FormatError(f"illegal character {ch!r}", i + 2, j + 1)
        if len(line) != want:
            raise FormatError(f"line for vertex {i} has {len(line)} characters, expected {want}", i + 2, min(len(line), want) + 1)
    return GraphColoring(n, rows, check=False)
