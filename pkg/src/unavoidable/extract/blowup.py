"""Converting an alternating homogeneous blowup of C_4 into a local pattern."""

from __future__ import annotations

from typing import Optional

from ..errors import InvalidWitness, MarginTooSmall, PreconditionFailed
from ..graph import GraphColoring
from ..patterns import AltBlowup, LocalPattern, verify_alt_blowup
from ..search import Unknown, find_local_pattern
from .params import ExtractionTrace, ExtractorParams, _note


def rotate_blowup(w: AltBlowup, k: int = 1) -> AltBlowup:
    """Relabel classes (A_k, A_{k+1}, ...); the odd rotations suit the colour-swapped graph."""
    sets = w.sets()
    return AltBlowup(*(sets[(i + k) % 4] for i in range(4)))


def blowup_to_pattern(
    g: GraphColoring,
    w: AltBlowup,
    t: int,
    params: Optional[ExtractorParams] = None,
    trace: Optional[ExtractionTrace] = None,
) -> LocalPattern:
    """Local pattern with parts of size t found among the blowup's vertices.

    A blowup with enough margin always hosts one; the oracle run is restricted
    to the union of the four classes and must fit under ``oracle_cap``.
    """
    params = params or ExtractorParams()
    try:
        ok = verify_alt_blowup(g, *w.sets())
    except ValueError as exc:
        raise InvalidWitness(f"malformed blowup: {exc}") from None
    if not ok:
        raise InvalidWitness("classes do not form an alternating blowup")
    size = len(w.A0)
    if size < params.blowup_margin * t:
        raise PreconditionFailed(
            f"class size {size} below margin {params.blowup_margin}*t", size=size, t=t
        )
    if 4 * size > params.oracle_cap:
        raise PreconditionFailed(f"4*{size} vertices exceed oracle cap {params.oracle_cap}", size=size)
    union = set().union(*map(set, w.sets()))
    got = find_local_pattern(g, t, params.budget, within=union)
    if isinstance(got, LocalPattern):
        _note(trace, "blowup_convert", got.inner.kind, classes=size, t=t)
        return got
    decision = "oracle budget exhausted" if isinstance(got, Unknown) else "no pattern inside blowup"
    _note(trace, "blowup_convert", decision, classes=size, t=t)
    raise MarginTooSmall(w, decision)
