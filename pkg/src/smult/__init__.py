"""Exact h-functions and s-multiplicities of presented local rings in characteristic p."""

from .errors import (
    CharacteristicMismatch,
    ConfigError,
    MissingInput,
    ModulusMismatch,
    NotArtinian,
    SmultError,
    StructuralError,
    TruncationTooSmall,
    UnsupportedIdeal,
    UnsupportedSurjection,
)
from .monomial import (
    MonomialIdeal,
    bracket_power,
    colength,
    contains,
    is_artinian,
    krull_dimension,
    minimalize,
    ordinary_power,
    parse_ideal,
)
from .modp import SparseMatrix, rank, row_span_dim
from .ring import (
    ExpandedIdeal,
    ModuleSpec,
    PolyRelation,
    RingPresentation,
    expand_pair,
    module_length,
    parse_ring,
    quadric,
    quotient_length,
)
from .constructions import (
    ArtinAlgebra,
    direct_filtration,
    duplication,
    duplication_presentation,
    fiber_product,
    fiber_product_presentation,
    ideal_power_length_oracle,
    idealization,
    idealization_presentation,
    truncation_oracle,
)
from .limits import (
    HEstimate,
    HQuery,
    e_estimate,
    endpoint_multiplicities,
    h_estimate,
    normalizer,
    wy_bound,
    zigzag_constants,
)
from .harness import CheckReport, CheckSpec, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArtinAlgebra",
    "CharacteristicMismatch",
    "CheckReport",
    "CheckSpec",
    "ConfigError",
    "ExpandedIdeal",
    "HEstimate",
    "HQuery",
    "MissingInput",
    "ModuleSpec",
    "ModulusMismatch",
    "MonomialIdeal",
    "NotArtinian",
    "PolyRelation",
    "RingPresentation",
    "SmultError",
    "SparseMatrix",
    "StructuralError",
    "TruncationTooSmall",
    "UnsupportedIdeal",
    "UnsupportedSurjection",
    "bracket_power",
    "colength",
    "contains",
    "direct_filtration",
    "duplication",
    "duplication_presentation",
    "e_estimate",
    "endpoint_multiplicities",
    "expand_pair",
    "fiber_product",
    "fiber_product_presentation",
    "h_estimate",
    "ideal_power_length_oracle",
    "idealization",
    "idealization_presentation",
    "is_artinian",
    "krull_dimension",
    "minimalize",
    "module_length",
    "normalizer",
    "ordinary_power",
    "parse_ideal",
    "parse_ring",
    "quadric",
    "quotient_length",
    "rank",
    "row_span_dim",
    "run_check",
    "run_suite",
    "truncation_oracle",
    "wy_bound",
    "zigzag_constants",
]
