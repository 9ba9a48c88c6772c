from __future__ import annotations

import csv
import io
from fractions import Fraction

import pytest

from unavoidable.generators import PPatternSpec, RandomMinDegreeSpec, UniformSpec
from unavoidable.sweep import CSV_HEADER, SweepConfig, records_to_csv, run_sweep, trial_seed


def test_three_trials_three_rows():
    cfg = SweepConfig((UniformSpec(12, Fraction(1, 2)),), (Fraction(1, 10),), (2,), trials=3)
    text = records_to_csv(run_sweep(cfg))
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == CSV_HEADER and len(rows) == 4
    assert len({r[4] for r in rows[1:]}) == 3


def test_byte_identical():
    cfg = SweepConfig((RandomMinDegreeSpec(32, Fraction(3, 10)),), (Fraction(1, 10),), (2,), trials=2, mode="both")
    assert records_to_csv(run_sweep(cfg)) == records_to_csv(run_sweep(cfg))


def test_parallel_matches_serial():
    base = dict(generators=(UniformSpec(12, Fraction(1, 2)),), eps=(Fraction(1, 10),), t=(1, 2), trials=3)
    serial = records_to_csv(run_sweep(SweepConfig(**base)))
    assert records_to_csv(run_sweep(SweepConfig(**base, workers=2))) == serial


def test_p_family_reports_p_pattern():
    cfg = SweepConfig(tuple(PPatternSpec(m) for m in (2, 3, 4)), (Fraction(1, 10),), (2,))
    assert [r.found_kind for r in run_sweep(cfg)] == ["p_pattern"] * 3


def test_mode_both_expands_cells():
    cfg = SweepConfig((PPatternSpec(2),), (Fraction(1, 5),), (2,), mode="both")
    assert [c[3] for c in cfg.cells()] == ["oracle", "extractor"]


def test_config_roundtrip_and_validation():
    cfg = SweepConfig((PPatternSpec(2), UniformSpec(8, Fraction(1, 3))), (Fraction(1, 10),), (1, 2), trials=2)
    assert SweepConfig.from_dict(cfg.to_dict()) == cfg
    with pytest.raises(ValueError):
        SweepConfig((PPatternSpec(2),), (), (2,))
    with pytest.raises(ValueError):
        SweepConfig.from_dict({**cfg.to_dict(), "bogus": 1})


def test_trial_seed_stable():
    assert trial_seed(0, 1, 2) == trial_seed(0, 1, 2) != trial_seed(0, 2, 1)
