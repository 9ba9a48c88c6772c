from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import combinations

import pytest

from unavoidable import (
    BLUE,
    RED,
    AltBlowup,
    GraphColoring,
    InducedBiclique,
    LocalPattern,
    PPattern,
    verify_induced_biclique,
    verify_local_pattern,
)
from unavoidable.errors import InvalidWitness, MarginTooSmall, PreconditionFailed
from unavoidable.extract import (
    STEP_LABELS,
    ExtractorParams,
    blowup_to_pattern,
    extract_theorem1,
    extract_theorem2,
    rotate_blowup,
)
from unavoidable.extract.theorem2 import iteration_bound
from unavoidable.generators import gen_p_pattern, gen_random_min_degree
from unavoidable.search import find_induced_biclique, find_local_pattern


def _labels_ok(res):
    assert res.trace.labels() and set(res.trace.labels()) <= STEP_LABELS


# --- clique-degree extractor -------------------------------------------------------------


def test_theorem1_random_min_degree():
    g = gen_random_min_degree(64, Fraction(35, 100), 1)
    res = extract_theorem1(g, Fraction(1, 20), 2)
    assert res.ok and isinstance(res.witness, InducedBiclique)
    w = res.witness
    assert len(w.A) == len(w.B) == 2
    assert verify_induced_biclique(g, w.color, w.A, w.B)
    assert isinstance(find_induced_biclique(g, w.color, 2), InducedBiclique)
    _labels_ok(res)
    assert res.trace.labels()[-1] == "success"


@pytest.mark.parametrize("g", [gen_p_pattern(4)[0], GraphColoring.monochromatic(32, RED)])
def test_theorem1_preconditions(g):
    with pytest.raises(PreconditionFailed):
        extract_theorem1(g, Fraction(1, 100), 2)


def test_theorem1_deterministic():
    g = gen_random_min_degree(64, Fraction(35, 100), 4)
    a = extract_theorem1(g, Fraction(1, 20), 2, ExtractorParams(seed=3))
    b = extract_theorem1(g, Fraction(1, 20), 2, ExtractorParams(seed=3))
    assert a.witness == b.witness and a.trace.to_dict() == b.trace.to_dict()


def test_theorem1_failure_report_is_json():
    # forcing one round of a tiny family: the run either finds a biclique or reports
    g = gen_random_min_degree(48, Fraction(2, 5), 2)
    res = extract_theorem1(g, Fraction(1, 50), 2, ExtractorParams(max_rounds=1, block_size=4))
    if res.ok:
        assert verify_induced_biclique(g, res.witness.color, res.witness.A, res.witness.B)
    else:
        d = json.loads(res.failure.to_json())
        assert d["kind"] == "failure_report" and d["trace"]["steps"]
    _labels_ok(res)


# --- local-pattern extractor ----------------------------------------------------------------


def test_theorem2_p4():
    g, _ = gen_p_pattern(4)
    res = extract_theorem2(g, Fraction(1, 5), 2)
    assert res.ok and isinstance(res.witness, LocalPattern)
    assert verify_local_pattern(g, res.witness, 2)
    assert isinstance(res.witness.inner, PPattern)
    _labels_ok(res)


def test_theorem2_precondition():
    with pytest.raises(PreconditionFailed):
        extract_theorem2(GraphColoring.monochromatic(16, RED), Fraction(1, 10), 2)


def test_theorem2_random_min_degree():
    g = gen_random_min_degree(64, Fraction(3, 10), 3)
    res = extract_theorem2(g, Fraction(1, 10), 2)
    assert res.ok and verify_local_pattern(g, res.witness, 2)
    assert isinstance(find_local_pattern(g, 2), LocalPattern)
    _labels_ok(res)


def test_theorem2_proof_route_on_large_p():
    g, _ = gen_p_pattern(12)
    res = extract_theorem2(g, Fraction(1, 5), 2)
    assert res.ok and res.via == "proof"
    assert verify_local_pattern(g, res.witness, 2)
    assert "blowup_convert" in res.trace.labels()


def test_theorem2_deterministic():
    g = gen_random_min_degree(64, Fraction(3, 10), 5)
    a = extract_theorem2(g, Fraction(1, 10), 2, ExtractorParams(seed=9))
    b = extract_theorem2(g, Fraction(1, 10), 2, ExtractorParams(seed=9))
    assert a.witness == b.witness and a.trace.to_json() == b.trace.to_json()


def test_iteration_bound():
    for eps in (Fraction(1, 2), Fraction(1, 10), Fraction(1, 5)):
        i = iteration_bound(eps)
        assert Fraction(9, 10) ** i <= eps**4 < Fraction(9, 10) ** (i - 1)


def test_soundness_over_seeds():
    for seed in range(10):
        g = gen_random_min_degree(48, Fraction(3, 10), seed)
        r2 = extract_theorem2(g, Fraction(1, 10), 2, ExtractorParams(seed=seed))
        if r2.ok:
            assert verify_local_pattern(g, r2.witness, 2)
        _labels_ok(r2)
        g1 = gen_random_min_degree(48, Fraction(2, 5), seed)
        r1 = extract_theorem1(g1, Fraction(1, 20), 2, ExtractorParams(seed=seed))
        if r1.ok:
            w = r1.witness
            assert verify_induced_biclique(g1, w.color, w.A, w.B)
        _labels_ok(r1)


# --- blowup conversion -------------------------------------------------------------------------


def _blowup_graph(size, rng=None, class_colors=(BLUE, BLUE, BLUE, BLUE)):
    """Colouring of K_{4 size} with an alternating blowup on consecutive classes."""
    classes = [list(range(i * size, (i + 1) * size)) for i in range(4)]
    red = []
    n = 4 * size
    cls = {v: i for i, c in enumerate(classes) for v in c}
    for u, v in combinations(range(n), 2):
        a, b = cls[u], cls[v]
        if a == b:
            c = class_colors[a]
        elif {a, b} in ({0, 1}, {2, 3}):
            c = RED
        elif {a, b} in ({1, 2}, {0, 3}):
            c = BLUE
        else:
            c = RED if rng is None or rng.random() < 0.5 else BLUE
        if c is RED:
            red.append((u, v))
    return GraphColoring.from_red_edges(n, red), AltBlowup(*classes)


def test_blowup_biclique_side():
    g, w = _blowup_graph(4)
    out = blowup_to_pattern(g, w, 2)
    assert verify_local_pattern(g, out, 2)
    assert isinstance(out.inner, InducedBiclique)


def test_blowup_invalid():
    g, w = _blowup_graph(4)
    bad = AltBlowup(w.A1, w.A0, w.A2, w.A3)
    with pytest.raises(InvalidWitness):
        blowup_to_pattern(g, bad, 2)


def test_blowup_margin_precondition():
    g, w = _blowup_graph(3)
    with pytest.raises(PreconditionFailed):
        blowup_to_pattern(g, w, 2)


def test_rotate_blowup_swaps_colours():
    g, w = _blowup_graph(4)
    from unavoidable import verify_alt_blowup

    assert verify_alt_blowup(g.swap_colors(), *rotate_blowup(w).sets())
    assert rotate_blowup(w, 4) == w


def test_blowup_random_planted():
    rng = random.Random(17)
    for _ in range(40):
        colors = tuple(rng.choice((RED, BLUE)) for _ in range(4))
        g, w = _blowup_graph(4, rng, colors)
        try:
            out = blowup_to_pattern(g, w, 2)
        except MarginTooSmall:
            continue
        assert verify_local_pattern(g, out, 2)
        assert set(v for s in out.sets() for v in s) <= set(range(16))
