"""Fidelity knobs, step traces and result records for the extractors."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Optional, Union

from ..exact import Rational, as_fraction, fmt_fraction
from ..patterns import Witness, witness_to_dict
from ..search import SearchBudget

# fixed vocabulary of trace step labels
STEP_LABELS = frozenset(
    {
        "precondition",
        "oracle_probe",
        "oracle_fallback",
        "chernoff_partition",
        "ramsey_pivot",
        "kst_greedy",
        "ramsey_kst",
        "dependent_random_choice",
        "triple",
        "triple_moreover",
        "sparse_or_biclique",
        "block_seed",
        "block_pair",
        "block_claim",
        "block_growth",
        "final_counting",
        "refine_condition",
        "refine_heavy_side",
        "refine_u",
        "refine_claim_density",
        "refine_v",
        "refine_dichotomy",
        "refine_absorb",
        "blowup_chain",
        "blowup_convert",
        "failure",
        "success",
    }
)


@dataclass(frozen=True)
class ExtractorParams:
    """Desk-scale stand-ins for the asymptotic sizes the proofs leave free.

    ``None`` fields take defaults that depend on ``t`` and ``eps``; call
    :meth:`resolved` before use.
    """

    block_size: Optional[int] = None  # default max(4**t, 16)
    clique_target: Optional[int] = None  # default min(10t, 2t+2)
    sparse_threshold: Optional[Fraction] = None  # default eps**2
    slack_exponent: int = 2
    blowup_margin: int = 2
    max_rounds: int = 64
    oracle_cap: int = 32
    resample_limit: int = 200
    drc_samples: int = 1
    drc_attempts: int = 8
    search_nodes: int = 2_000_000
    seed: int = 0

    def __post_init__(self):
        if self.sparse_threshold is not None:
            object.__setattr__(self, "sparse_threshold", as_fraction(self.sparse_threshold))
            if not 0 < self.sparse_threshold < 1:
                raise ValueError("sparse_threshold must lie in (0, 1)")
        for name in (
            "slack_exponent",
            "blowup_margin",
            "max_rounds",
            "oracle_cap",
            "resample_limit",
            "drc_samples",
            "drc_attempts",
            "search_nodes",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        for name in ("block_size", "clique_target"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.oracle_cap > 64:
            raise ValueError("oracle_cap must be <= 64")

    def resolved(self, t: int, eps: Rational) -> "ExtractorParams":
        eps = as_fraction(eps)
        return replace(
            self,
            block_size=self.block_size if self.block_size is not None else max(4**t, 16),
            clique_target=self.clique_target if self.clique_target is not None else min(10 * t, 2 * t + 2),
            sparse_threshold=self.sparse_threshold if self.sparse_threshold is not None else eps**2,
        )

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(self.search_nodes)

    def to_dict(self) -> dict[str, Any]:
        out = {}
        for k in self.__dataclass_fields__:
            v = getattr(self, k)
            out[k] = fmt_fraction(v) if isinstance(v, Fraction) else v
        return out


@dataclass
class TraceStep:
    lemma: str
    decision: str
    sizes: dict[str, int] = field(default_factory=dict)
    density: Optional[Fraction] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "lemma": self.lemma,
            "sizes": dict(self.sizes),
            "density": None if self.density is None else fmt_fraction(self.density),
            "decision": self.decision,
        }


class ExtractionTrace:
    """Ordered record of the steps an extraction took."""

    def __init__(self):
        self.steps: list[TraceStep] = []

    def add(self, lemma: str, decision: str, density: Optional[Rational] = None, **sizes: int) -> TraceStep:
        if lemma not in STEP_LABELS:
            raise ValueError(f"unknown trace label {lemma!r}")
        step = TraceStep(lemma, decision, sizes, None if density is None else as_fraction(density))
        self.steps.append(step)
        return step

    def labels(self) -> list[str]:
        return [s.lemma for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_dict(self) -> dict[str, Any]:
        return {"steps": [s.to_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _note(trace: Optional[ExtractionTrace], lemma: str, decision: str, density=None, **sizes) -> None:
    if trace is not None:
        trace.add(lemma, decision, density, **sizes)


@dataclass
class FailureReport:
    """An extraction that ran to completion without a witness, with its evidence."""

    reason: str
    trace: ExtractionTrace
    state: dict[str, int] = field(default_factory=dict)
    densities: dict[str, Fraction] = field(default_factory=dict)
    oracle: str = "skipped"  # none | partial (window only) | unknown | skipped

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "failure_report",
            "reason": self.reason,
            "state": dict(self.state),
            "densities": {k: fmt_fraction(v) for k, v in self.densities.items()},
            "oracle": self.oracle,
            "trace": self.trace.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class ExtractionResult:
    witness: Optional[Witness]
    trace: ExtractionTrace
    failure: Optional[FailureReport] = None
    rounds: int = 0
    via: str = "proof"  # proof | oracle_probe | oracle_fallback | none

    @property
    def ok(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict[str, Any]:
        if self.witness is not None:
            return {
                "witness": witness_to_dict(self.witness),
                "via": self.via,
                "rounds": self.rounds,
                "trace": self.trace.to_dict(),
            }
        assert self.failure is not None
        return {**self.failure.to_dict(), "rounds": self.rounds}


Density = Union[Fraction, int]
