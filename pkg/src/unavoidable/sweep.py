"""Reproducible experiment sweeps over generator specs, eps and t grids."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Any, Optional

from .errors import PreconditionFailed, ResampleExhausted, UnavoidableError
from .exact import as_fraction, fmt_fraction
from .extract import ExtractorParams, extract_theorem1, extract_theorem2
from .generators import GenSpec, spec_from_dict, spec_to_dict, with_seed
from .patterns import LocalPattern
from .search import SearchBudget, Unknown, find_alt_blowup, find_induced_biclique, find_local_pattern, find_p_pattern
from .graph import BLUE, RED

CSV_HEADER = ("generator", "n", "eps", "t", "seed", "mode", "found_kind", "rounds", "millis")
MODES = ("oracle", "extractor")
ORACLE_PATTERNS = ("local", "induced-biclique", "p-pattern", "alt-c4")


def trial_seed(base: int, cell: int, trial: int) -> int:
    """Stable 64-bit seed for one (cell, trial), independent of scheduling."""
    h = hashlib.blake2b(f"{base}:{cell}:{trial}".encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


@dataclass(frozen=True)
class SweepConfig:
    generators: tuple[GenSpec, ...]
    eps: tuple[Fraction, ...]
    t: tuple[int, ...]
    trials: int = 1
    base_seed: int = 0
    mode: str = "oracle"  # oracle | extractor | both
    pattern: str = "local"  # oracle target
    theorem: int = 2  # extractor pipeline
    out: Optional[str] = None
    budget: int = 2_000_000
    params: dict[str, Any] = field(default_factory=dict)  # ExtractorParams overrides
    record_timing: bool = False  # wall time breaks byte-identical output, so off by default
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.generators or not self.eps or not self.t:
            raise ValueError("generator, eps and t grids must be non-empty")
        if self.mode not in MODES + ("both",):
            raise ValueError(f"mode must be one of oracle, extractor, both; got {self.mode!r}")
        if self.pattern not in ORACLE_PATTERNS:
            raise ValueError(f"pattern must be one of {ORACLE_PATTERNS}")
        if self.theorem not in (1, 2):
            raise ValueError("theorem must be 1 or 2")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def modes(self) -> tuple[str, ...]:
        return MODES if self.mode == "both" else (self.mode,)

    def cells(self) -> list[tuple[GenSpec, Fraction, int, str]]:
        return list(product(self.generators, self.eps, self.t, self.modes))

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "SweepConfig":
        d = dict(d)
        try:
            gens = tuple(spec_from_dict(g) for g in d.pop("generators"))
            eps = tuple(as_fraction(e) for e in d.pop("eps"))
            ts = tuple(int(x) for x in d.pop("t"))
        except KeyError as exc:
            raise ValueError(f"sweep config missing {exc}") from None
        known = set(cls.__dataclass_fields__) - {"generators", "eps", "t"}
        extra = set(d) - known
        if extra:
            raise ValueError(f"unknown sweep config keys: {sorted(extra)}")
        return cls(gens, eps, ts, **d)

    @classmethod
    def from_json(cls, text: str) -> "SweepConfig":
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["generators"] = [spec_to_dict(g) for g in self.generators]
        out["eps"] = [fmt_fraction(e) for e in self.eps]
        out["t"] = list(self.t)
        return out


@dataclass(frozen=True)
class SweepRecord:
    generator: str
    n: int
    eps: Fraction
    t: int
    seed: int
    mode: str
    found_kind: str
    rounds: int
    millis: Optional[int]

    def row(self) -> list[str]:
        return [
            self.generator,
            str(self.n),
            fmt_fraction(self.eps),
            str(self.t),
            str(self.seed),
            self.mode,
            self.found_kind,
            str(self.rounds),
            "" if self.millis is None else str(self.millis),
        ]


def _kind(w) -> str:
    if isinstance(w, LocalPattern):
        return w.inner.kind
    return w.kind


def _oracle(g, t, pattern, budget):
    if pattern == "local":
        return find_local_pattern(g, t, budget) if 2 * t <= g.n else None
    if pattern == "induced-biclique":
        if 2 * t > g.n:
            return None
        unknown = None
        for color in (RED, BLUE):
            got = find_induced_biclique(g, color, t, budget)
            if got is not None and not isinstance(got, Unknown):
                return got
            unknown = unknown or got
        return unknown
    if 4 * t > g.n:
        return None
    if pattern == "p-pattern":
        return find_p_pattern(g, t, budget)
    return find_alt_blowup(g, t, budget)


def run_trial(cfg: SweepConfig, cell: int, trial: int) -> SweepRecord:
    spec, eps, t, mode = cfg.cells()[cell]
    seed = trial_seed(cfg.base_seed, cell, trial)
    start = time.perf_counter()
    g = with_seed(spec, seed).build()
    rounds = 0
    if mode == "oracle":
        got = _oracle(g, t, cfg.pattern, SearchBudget(cfg.budget))
        kind = "none" if got is None else "unknown" if isinstance(got, Unknown) else _kind(got)
    else:
        params = ExtractorParams(**{**cfg.params, "seed": seed, "search_nodes": cfg.budget})
        run = extract_theorem1 if cfg.theorem == 1 else extract_theorem2
        try:
            res = run(g, eps, t, params)
            rounds = res.rounds
            kind = _kind(res.witness) if res.ok else "none"
        except (PreconditionFailed, ResampleExhausted):
            kind = "precondition_failed"
        except UnavoidableError:
            kind = "error"
    millis = round((time.perf_counter() - start) * 1000) if cfg.record_timing else None
    return SweepRecord(spec.label(), g.n, eps, t, seed, mode, kind, rounds, millis)


def _run_index(args):
    cfg, cell, trial = args
    return run_trial(cfg, cell, trial)


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """One record per (cell, trial), ordered by cell index then trial index."""
    jobs = [(cfg, c, k) for c in range(len(cfg.cells())) for k in range(cfg.trials)]
    if cfg.workers == 1:
        records = [_run_index(j) for j in jobs]
    else:
        with ProcessPoolExecutor(cfg.workers) as pool:
            records = list(pool.map(_run_index, jobs))  # map keeps submission order
    if cfg.out is not None:
        write_csv(records, cfg.out)
    return records


def records_to_csv(records: list[SweepRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def write_csv(records: list[SweepRecord], path) -> None:
    Path(path).write_text(records_to_csv(records), encoding="utf-8")
