from __future__ import annotations

import os
import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from unavoidable import GraphColoring  # noqa: E402
from unavoidable.generators import gen_p_pattern, gen_uniform  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def colorings(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if bits >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return GraphColoring(n, rows)


def random_coloring(rng: random.Random, n: int, p: float = 0.5) -> GraphColoring:
    return gen_uniform(n, _frac(p), rng.getrandbits(32))


def _frac(p):
    from fractions import Fraction

    return Fraction(p).limit_denominator(1000)


@pytest.fixture
def p1():
    return gen_p_pattern(1)[0]


@pytest.fixture
def p2():
    return gen_p_pattern(2)[0]


@pytest.fixture
def red_c5():
    return GraphColoring.from_red_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def red_k22():
    return GraphColoring.from_red_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
