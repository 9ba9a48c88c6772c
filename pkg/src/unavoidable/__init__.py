"""Unavoidable patterns in 2-edge-coloured complete graphs."""

from .graph import BLUE, RED, Color, DegreeThreshold, GraphColoring, VertexSet, decode, encode, from_red_edges
from .patterns import (
    AltBlowup,
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
from .search import (
    SearchBudget,
    Unknown,
    all_colorings,
    find_alt_blowup,
    find_induced_biclique,
    find_local_pattern,
    find_mono_clique,
    find_p_pattern,
)

__version__ = "0.1.0"
