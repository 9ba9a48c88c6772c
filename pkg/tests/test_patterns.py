from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import colorings
from unavoidable import (
    BLUE,
    RED,
    AltBlowup,
    GraphColoring,
    InducedBiclique,
    LocalPattern,
    MonoClique,
    PPattern,
    verify_alt_blowup,
    verify_induced_biclique,
    verify_local_pattern,
    verify_mono_clique,
    verify_p_pattern,
    verify_witness,
)
from unavoidable.errors import FormatError, InvalidVertex, OverlappingSets, SizeMismatch
from unavoidable.generators import gen_p_pattern
from unavoidable.patterns import witness_from_json, witness_to_dict, witness_to_json


def test_mono_clique_examples(p2):
    assert verify_mono_clique(GraphColoring.monochromatic(4, RED), RED, {0, 1, 2})
    assert verify_mono_clique(p2, RED, {0, 1, 2, 3})
    assert not verify_mono_clique(p2, RED, {0, 1, 2, 4})
    with pytest.raises(InvalidVertex):
        verify_mono_clique(p2, RED, {0, 9})


def test_induced_biclique_examples(red_k22, p2):
    assert verify_induced_biclique(red_k22, RED, {0, 1}, {2, 3})
    assert not verify_induced_biclique(red_k22, RED, {0, 2}, {1, 3})
    assert not verify_induced_biclique(p2, RED, {0, 1}, {4, 5})
    with pytest.raises(OverlappingSets):
        verify_induced_biclique(red_k22, RED, {0, 1}, {1, 2})
    with pytest.raises(SizeMismatch):
        verify_induced_biclique(red_k22, RED, {0}, {2, 3})


def test_p_pattern_examples(p1):
    assert verify_p_pattern(p1, {0}, {1}, {2}, {3})
    assert verify_p_pattern(p1, {1}, {0}, {3}, {2})
    assert not verify_p_pattern(p1, {0}, {2}, {1}, {3})


def test_alt_blowup_examples(p2):
    g = GraphColoring.from_red_edges(4, [(0, 1), (2, 3), (0, 2)])
    assert verify_alt_blowup(g, {0}, {1}, {2}, {3})
    assert not verify_alt_blowup(g, {1}, {2}, {3}, {0})
    assert not verify_alt_blowup(p2, {0, 1}, {4, 5}, {6, 7}, {2, 3})


def test_local_pattern_examples(red_k22, p2):
    w = LocalPattern(InducedBiclique(RED, (0, 1), (2, 3)))
    assert verify_local_pattern(red_k22, w, 2)
    assert verify_local_pattern(p2, LocalPattern(PPattern((0, 1), (2, 3), (4, 5), (6, 7))), 2)
    with pytest.raises(SizeMismatch):
        verify_local_pattern(red_k22, w, 1)


def test_t1_is_accepted_literally(red_k22):
    # any red edge is an induced red K_{1,1}
    assert verify_induced_biclique(red_k22, RED, {0}, {2})


@given(colorings(min_n=4, max_n=10), st.data())
def test_biclique_symmetric(g, data):
    t = data.draw(st.integers(1, g.n // 2))
    verts = data.draw(st.permutations(range(g.n)))
    a, b = set(verts[:t]), set(verts[t : 2 * t])
    for c in (RED, BLUE):
        assert verify_induced_biclique(g, c, a, b) == verify_induced_biclique(g, c, b, a)


@given(colorings(min_n=4, max_n=8), st.data())
def test_p_pattern_symmetries_random(g, data):
    verts = data.draw(st.permutations(range(g.n)))
    t = data.draw(st.integers(1, g.n // 4))
    V = [set(verts[i * t : (i + 1) * t]) for i in range(4)]
    base = verify_p_pattern(g, *V)
    assert verify_p_pattern(g, V[1], V[0], V[3], V[2]) == base
    assert verify_p_pattern(g.swap_colors(), V[2], V[3], V[1], V[0]) == base


def test_colour_swap_needs_reversed_tail(p1):
    # swapping colours maps (V1,V2,V3,V4) to (V3,V4,V2,V1); the order (V3,V4,V1,V2) does not work
    s = p1.swap_colors()
    assert verify_p_pattern(s, {2}, {3}, {1}, {0})
    assert not verify_p_pattern(s, {2}, {3}, {0}, {1})


def test_p_pattern_symmetries_exhaustive_t1():
    from itertools import permutations

    from unavoidable import all_colorings

    for g in all_colorings(4):
        for V in permutations(range(4)):
            S = [{v} for v in V]
            base = verify_p_pattern(g, *S)
            assert verify_p_pattern(g, S[1], S[0], S[3], S[2]) == base
            assert verify_p_pattern(g.swap_colors(), S[2], S[3], S[1], S[0]) == base


@pytest.mark.parametrize("m", range(1, 9))
def test_canonical_p_parts_verify(m):
    g, parts = gen_p_pattern(m)
    assert verify_p_pattern(g, *parts)


def test_witness_sets_sorted():
    w = InducedBiclique(RED, (3, 1), (2, 0))
    assert w.A == (1, 3) and w.B == (0, 2)


@pytest.mark.parametrize(
    "w",
    [
        MonoClique(BLUE, (0, 2, 5)),
        InducedBiclique(RED, (0, 1), (2, 3)),
        PPattern((0,), (1,), (2,), (3,)),
        AltBlowup((0,), (1,), (2,), (3,)),
        LocalPattern(PPattern((0, 1), (2, 3), (4, 5), (6, 7))),
        LocalPattern(InducedBiclique(BLUE, (0, 1), (2, 3))),
    ],
)
def test_witness_json_roundtrip(w):
    assert witness_from_json(witness_to_json(w)) == w
    d = witness_to_dict(w)
    assert d["kind"] == w.kind and all(s == sorted(s) for s in d["sets"])


@pytest.mark.parametrize(
    "text",
    ["[]", '{"kind": "mono_clique", "sets": [[0, 1]]}', '{"kind": "nope", "sets": []}',
     '{"kind": "p_pattern", "sets": [[0], [1]]}', '{"kind": "alt_blowup", "sets": [[0, 0], [1], [2], [3]]}'],
)
def test_witness_json_rejects(text):
    with pytest.raises(FormatError):
        witness_from_json(text)


def test_verify_witness_dispatch(p2):
    assert verify_witness(p2, PPattern((0, 1), (2, 3), (4, 5), (6, 7)))
    assert verify_witness(p2, MonoClique(RED, (0, 1, 2, 3)))
    assert not verify_witness(p2, MonoClique(BLUE, (0, 1)))
