"""Exact rational helpers, including decisions involving powers of e.

Bounds such as ``|N| >= (alpha/e)**k * |B|`` compare a rational against a
rational multiple of ``e**k``.  For ``k != 0`` and a nonzero coefficient that
product is irrational, so a shrinking rational enclosure of ``e`` always
decides the comparison after finitely many refinements.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[Fraction, int, str, float]


def as_fraction(x: Rational) -> Fraction:
    """Parse ``"p/q"``, decimal strings, ints, floats into a Fraction.

    Floats go through their shortest repr, so ``0.35`` becomes ``7/20``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def fmt_fraction(x: Fraction) -> str:
    """Serialize as ``"p/q"`` (``"p/1"`` for integers keeps the format uniform)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def e_enclosure(terms: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo < e < hi`` from the first ``terms`` factorial terms."""
    lo = Fraction(0)
    fact = 1
    for j in range(terms):
        if j:
            fact *= j
        lo += Fraction(1, fact)
    # tail sum_{j>=terms} 1/j! < 2/terms!
    fact *= terms
    return lo, lo + Fraction(2, fact)


def _exp_enclosure(k: int, terms: int) -> tuple[Fraction, Fraction]:
    lo, hi = e_enclosure(terms)
    if k >= 0:
        return lo**k, hi**k
    return 1 / hi ** (-k), 1 / lo ** (-k)


def cmp_exp(coef: Rational, k: int, rhs: Rational) -> int:
    """Sign of ``coef * e**k - rhs`` (returns -1, 0 or 1), decided exactly."""
    coef = as_fraction(coef)
    rhs = as_fraction(rhs)
    if coef == 0 or k == 0:
        lhs = coef
        return (lhs > rhs) - (lhs < rhs)
    terms = 12
    while True:
        lo, hi = _exp_enclosure(k, terms)
        a, b = sorted((coef * lo, coef * hi))
        if a > rhs:
            return 1
        if b < rhs:
            return -1
        terms *= 2


def ceil_exp(coef: Rational, k: int) -> int:
    """``ceil(coef * e**k)`` computed exactly."""
    coef = as_fraction(coef)
    if coef == 0 or k == 0:
        return math.ceil(coef)
    terms = 12
    while True:
        lo, hi = _exp_enclosure(k, terms)
        a, b = sorted((coef * lo, coef * hi))
        if math.floor(a) == math.floor(b):
            return math.floor(a) + 1
        terms *= 2


def kst_bound(alpha: Rational, k: int, b: int) -> int:
    """``ceil((alpha/e)**k * b)``: the common-neighbourhood size a dense bipartite graph guarantees."""
    alpha = as_fraction(alpha)
    return ceil_exp(alpha**k * b, -k)


def ceil_root_power(base: Fraction, num: int, den: int) -> int:
    """Smallest integer ``m >= 1`` with ``m**den >= base**num`` (i.e. ``ceil(base**(num/den))``)."""
    base = Fraction(base)
    if base <= 0:
        raise ValueError("base must be positive")
    target = base**num
    # float estimate, then exact correction
    try:
        m = max(1, math.ceil(float(base) ** (num / den)))
    except OverflowError:
        m = 1 << (num * max(1, math.ceil(math.log2(float(base)))) // den + 1)
    while m > 1 and Fraction(m - 1) ** den >= target:
        m -= 1
    while Fraction(m) ** den < target:
        m += 1
    return m
