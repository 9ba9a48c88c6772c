from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import colorings
from unavoidable import BLUE, RED, Color, DegreeThreshold, GraphColoring, VertexSet, decode, encode
from unavoidable.errors import (
    DuplicatePair,
    FormatError,
    InvalidVertex,
    OverlappingSets,
    SelfLoop,
    TooSmall,
)
from unavoidable.generators import gen_p_pattern


def test_color_opposite():
    assert RED.opposite is BLUE and BLUE.opposite is RED
    assert len(list(Color)) == 2
    assert Color.parse("r") is RED and Color.parse("Blue") is BLUE


def test_from_red_edges_examples(p1):
    k2 = GraphColoring.from_red_edges(2, [(0, 1)])
    assert k2.color_of(0, 1) is RED
    assert p1.degrees(RED) == [2, 2, 1, 1]
    k3 = GraphColoring.from_red_edges(3, [])
    assert k3.degrees(BLUE) == [2, 2, 2]


@pytest.mark.parametrize(
    "pairs,exc",
    [([(0, 5)], InvalidVertex), ([(1, 1)], SelfLoop), ([(0, 1), (1, 0)], DuplicatePair)],
)
def test_from_red_edges_errors(pairs, exc):
    with pytest.raises(exc):
        GraphColoring.from_red_edges(4, pairs)


def test_needs_two_vertices():
    with pytest.raises(ValueError):
        GraphColoring.from_red_edges(1, [])


def test_color_of_examples(p1):
    assert p1.color_of(0, 1) is RED
    assert p1.color_of(2, 3) is BLUE
    assert p1.color_of(1, 2) is BLUE
    assert p1.color_of(2, 1) is p1.color_of(1, 2)
    with pytest.raises(SelfLoop):
        p1.color_of(1, 1)
    with pytest.raises(InvalidVertex):
        p1.color_of(0, 4)


def test_degree_examples(p1, p2):
    assert p2.degree(RED, 0) == 5
    assert GraphColoring.monochromatic(4, RED).degree(BLUE, 2) == 0
    assert p1.degree(RED, 0, within={1, 2}) == 2
    with pytest.raises(InvalidVertex):
        p1.degree(RED, 9)


def test_pair_count_examples(p2):
    V1, V3 = {0, 1}, {4, 5}
    assert p2.pair_count(RED, V1, V3) == 4
    assert p2.pair_count(BLUE, V1, V3) == 0
    assert p2.pair_count(RED, V1) == 1
    with pytest.raises(OverlappingSets):
        p2.pair_count(RED, {0, 1}, {1, 2})


def test_common_neighbors_examples(p2):
    k4 = GraphColoring.monochromatic(4, RED)
    assert k4.common_neighbors(RED, {0, 1}) == VertexSet({2, 3})
    assert p2.common_neighbors(RED, {0, 1}) == VertexSet({2, 3, 4, 5})
    assert p2.common_neighbors(BLUE, set()) == p2.vertices


def test_min_degree_ok_examples(p1):
    assert p1.min_degree_ok(DegreeThreshold.linear(Fraction(1, 4)))
    assert not p1.min_degree_ok(DegreeThreshold.quarter_plus(Fraction(1, 100)))
    assert not GraphColoring.monochromatic(5, RED).min_degree_ok(DegreeThreshold.linear(Fraction(1, 10)))


def test_threshold_ranges():
    with pytest.raises(ValueError):
        DegreeThreshold.quarter_plus(Fraction(1, 4))
    with pytest.raises(ValueError):
        DegreeThreshold.linear(Fraction(1, 2))
    assert DegreeThreshold.quarter_plus("1/10").bound(40) == 14


def test_induced_examples(p2):
    k, verts = p2.induced({0, 1, 2, 3})
    assert k == GraphColoring.monochromatic(4, RED) and verts == (0, 1, 2, 3)
    assert p2.induced(range(8))[0] == p2
    assert p2.induced({4, 5, 6, 7})[0] == GraphColoring.monochromatic(4, BLUE)
    with pytest.raises(TooSmall):
        p2.induced({3})


def test_encode_examples(p1):
    assert encode(p1) == "UPC1 4\nRRB\nBR\nB\n"
    assert decode(encode(p1)) == p1


@pytest.mark.parametrize(
    "text,line",
    [
        ("UPC1 4\nRRX\nBR\nB\n", 2),
        ("UPC2 4\nRRB\nBR\nB\n", 1),
        ("UPC1 4\nRRB\nBR\n", 4),
        ("UPC1 4\nRRB\nBRR\nB\n", 3),
        ("UPC1 4\nRRB\nBR\nB", 4),
        ("UPC1 04\nRRB\nBR\nB\n", 1),
        ("UPC1 4\nRRB\nBR\nB\n\n", 5),
    ],
)
def test_decode_rejects(text, line):
    with pytest.raises(FormatError) as info:
        decode(text)
    assert info.value.line == line


@given(colorings())
def test_color_partition_and_degree_sum(g):
    for u, v in combinations(range(g.n), 2):
        assert (v in g.neighbors(RED, u)) != (v in g.neighbors(BLUE, u))
    for v in range(g.n):
        assert g.degree(RED, v) + g.degree(BLUE, v) == g.n - 1


@given(colorings(min_n=4), st.data())
def test_count_complement(g, data):
    verts = list(range(g.n))
    a = set(data.draw(st.lists(st.sampled_from(verts), unique=True, min_size=1, max_size=g.n - 1)))
    rest = [v for v in verts if v not in a]
    b = set(data.draw(st.lists(st.sampled_from(rest), unique=True, min_size=1)))
    assert g.pair_count(RED, a, b) + g.pair_count(BLUE, a, b) == len(a) * len(b)
    assert g.pair_count(RED, a) + g.pair_count(BLUE, a) == len(a) * (len(a) - 1) // 2


@given(colorings(max_n=16), st.data())
def test_common_neighbors_naive(g, data):
    s = set(data.draw(st.lists(st.integers(0, g.n - 1), unique=True, max_size=4)))
    for color in (RED, BLUE):
        naive = {v for v in range(g.n) if v not in s and all(g.color_of(v, u) is color for u in s)}
        if not s:
            naive = set(range(g.n))
        assert set(g.common_neighbors(color, s)) == naive


@given(colorings(max_n=20))
def test_encode_decode_identity(g):
    text = encode(g)
    assert decode(text) == g
    assert encode(decode(text)) == text


@given(st.sets(st.integers(0, 40)), st.sets(st.integers(0, 40)), st.sets(st.integers(0, 40)))
def test_vertex_set_algebra(a, b, c):
    A, B, C = VertexSet(a), VertexSet(b), VertexSet(c)
    assert set(A & B) == a & b and set(A | B) == a | b and set(A - B) == a - b
    assert (A & (B | C)) == (A & B) | (A & C)
    assert A - (B | C) == (A - B) & (A - C)
    assert len(A ^ B) == len(a ^ b)
    assert list(A) == sorted(a)


def test_immutable(p1):
    with pytest.raises(AttributeError):
        p1.n = 5


def test_swap_colors_degrees():
    g = gen_p_pattern(3)[0]
    s = g.swap_colors()
    assert s.degrees(RED) == g.degrees(BLUE)
    assert s.swap_colors() == g


def test_random_roundtrip_many():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 70)
        g = GraphColoring(n, _rows(rng, n))
        assert decode(encode(g)) == g


def _rows(rng, n):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows
