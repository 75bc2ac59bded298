"""Eigenvalue location and eigenvalue-free interval generators for threshold graphs."""

__version__ = "0.1.0"

from .cotree import (  # noqa: E402
    BinarySequence,
    Cotree,
    binary_to_cotree,
    build_adjacency,
    cotree_to_binary,
    parse_binary,
    parse_cotree,
    poset_leq,
)
from .diagonalize import (  # noqa: E402
    CountTriple,
    DiagOutcome,
    bisect_theta_minus,
    bisect_theta_plus,
    count_triple,
    diagonalize_full,
    inertia_closed_form,
    left_closed_form,
    mult_minus_one,
    specialize_leaves,
)
from .generators import f, g, lfi, rfi  # noqa: E402
from .numeric import floor_plus_one, scalar_from_decimal  # noqa: E402
from .search import SearchReport, minimality_search  # noqa: E402
from .spectra import (  # noqa: E402
    Interval,
    Spectrum,
    check_family_extension,
    is_left_free,
    is_right_free,
    oracle_spectrum,
)

__all__ = [
    "BinarySequence",
    "Cotree",
    "CountTriple",
    "DiagOutcome",
    "Interval",
    "SearchReport",
    "Spectrum",
    "binary_to_cotree",
    "bisect_theta_minus",
    "bisect_theta_plus",
    "build_adjacency",
    "check_family_extension",
    "cotree_to_binary",
    "count_triple",
    "diagonalize_full",
    "f",
    "floor_plus_one",
    "g",
    "inertia_closed_form",
    "is_left_free",
    "is_right_free",
    "left_closed_form",
    "lfi",
    "minimality_search",
    "mult_minus_one",
    "oracle_spectrum",
    "parse_binary",
    "parse_cotree",
    "poset_leq",
    "rfi",
    "scalar_from_decimal",
    "specialize_leaves",
]
