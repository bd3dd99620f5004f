"""Cayley graphs from difference sets: exact spectra and expander certification."""

from .groups import AbelianGroup, cyclic
from .gf2 import (
    Gf2Field,
    KloostermanTable,
    kloosterman,
    kloosterman_one_carlitz,
    kloosterman_one_recursive,
    kloosterman_lifted,
    kloosterman_value_set,
)
from .groupring import (
    GdsCertificate,
    difference_counts,
    has_multiplier_minus_one,
    search_gds,
    verify_difference_set,
    verify_gds,
)
from .graphs import CayleyGraph, ConnectionSet, DisconnectedGraphError, GraphStats, InvariantError
from .spectral import (
    RamanujanVerdict,
    Spectrum,
    crossing_lemma_bound,
    gds_predicted_eigenvalues,
    gds_sufficient_filters,
    ramanujan_check,
    spectral_gap,
    spectrum_by_characters,
    spectrum_oracle,
    vertex_expansion,
)
from .constructions import (
    ConstructionReport,
    bent_hadamard_set,
    dij_cardinality,
    dij_set,
    kloosterman_trace_set,
    polar_trace_set,
    theorem33_condition,
    theorem33_set,
)
from .search import SearchHit, degree_of_encoding, search_ramanujan_circulant

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "cyclic",
    "Gf2Field",
    "KloostermanTable",
    "kloosterman",
    "kloosterman_one_carlitz",
    "kloosterman_one_recursive",
    "kloosterman_lifted",
    "kloosterman_value_set",
    "GdsCertificate",
    "difference_counts",
    "has_multiplier_minus_one",
    "search_gds",
    "verify_difference_set",
    "verify_gds",
    "CayleyGraph",
    "ConnectionSet",
    "DisconnectedGraphError",
    "GraphStats",
    "InvariantError",
    "RamanujanVerdict",
    "Spectrum",
    "crossing_lemma_bound",
    "gds_predicted_eigenvalues",
    "gds_sufficient_filters",
    "ramanujan_check",
    "spectral_gap",
    "spectrum_by_characters",
    "spectrum_oracle",
    "vertex_expansion",
    "ConstructionReport",
    "bent_hadamard_set",
    "dij_cardinality",
    "dij_set",
    "kloosterman_trace_set",
    "polar_trace_set",
    "theorem33_condition",
    "theorem33_set",
    "SearchHit",
    "degree_of_encoding",
    "search_ramanujan_circulant",
]
