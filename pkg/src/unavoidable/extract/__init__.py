"""Constructive extractors: lemma-level tools and the two theorem pipelines."""

from .blowup import blowup_to_pattern, rotate_blowup
from .lemmas import (
    Moreover,
    RamseyKstResult,
    SparseCertificate,
    Triple,
    balanced_partition,
    clique_triple,
    drc_subset,
    kst_subset,
    lemma123_triple,
    mono_clique_in,
    partition_defect,
    pivot_clique,
    pivot_walk,
    ramsey_clique,
    ramsey_kst,
    sparse_pair_or_biclique,
)
from .params import (
    STEP_LABELS,
    ExtractionResult,
    ExtractionTrace,
    ExtractorParams,
    FailureReport,
    TraceStep,
)
from .theorem1 import BlockFamily, extract_theorem1
from .theorem2 import RefinementState, extract_theorem2
