"""Exact enumeration of 3-regular one-face maps on surfaces.

Closed-form census counts (rooted, sensed, unsensed) for orientable and
non-orientable carriers, the quotient-orbifold machinery behind them, and a
brute-force polygon-gluing oracle that verifies everything at small size.
"""

from .census import (
    CensusRow,
    nonorientable_census_row,
    orientable_census_row,
    sensed_cubic_orientable,
    unsensed_cubic_nonorientable,
    unsensed_cubic_orientable,
)
from .exactnum import BigCount, ExactRational
from .oracle import (
    DEFAULT_MAX_EDGES_FULL,
    DEFAULT_MAX_EDGES_ORIENTABLE,
    EnumerationLimitError,
    MapInvariants,
    PolygonGluing,
    classify,
    count_precubic,
    count_rooted,
    count_sensed_orientable,
    count_unsensed,
)
from .orbifolds import (
    H2OrbifoldClass,
    SignatureSolution,
    epsilon_h2_nonorientable,
    epsilon_h2_orientable,
    epsilon_hl,
    h2_orbifold_family,
    solve_closed_orbifolds,
)
from .rooted_counts import (
    SurfaceClass,
    c_coefficient,
    covering_genus_orientable,
    precubic_edges_nonorientable,
    precubic_leaves_nonorientable,
    precubic_leaves_orientable,
    precubic_nonorientable_by_genus_pair,
    precubic_nonorientable_by_leaves,
    precubic_orientable,
    rooted_cubic_nonorientable,
    rooted_cubic_orientable,
)

__version__ = "0.1.0"

__all__ = [
    "BigCount",
    "CensusRow",
    "DEFAULT_MAX_EDGES_FULL",
    "DEFAULT_MAX_EDGES_ORIENTABLE",
    "EnumerationLimitError",
    "ExactRational",
    "H2OrbifoldClass",
    "MapInvariants",
    "PolygonGluing",
    "SignatureSolution",
    "SurfaceClass",
    "c_coefficient",
    "classify",
    "count_precubic",
    "count_rooted",
    "count_sensed_orientable",
    "count_unsensed",
    "covering_genus_orientable",
    "epsilon_h2_nonorientable",
    "epsilon_h2_orientable",
    "epsilon_hl",
    "h2_orbifold_family",
    "nonorientable_census_row",
    "orientable_census_row",
    "precubic_edges_nonorientable",
    "precubic_leaves_nonorientable",
    "precubic_leaves_orientable",
    "precubic_nonorientable_by_genus_pair",
    "precubic_nonorientable_by_leaves",
    "precubic_orientable",
    "rooted_cubic_nonorientable",
    "rooted_cubic_orientable",
    "sensed_cubic_orientable",
    "solve_closed_orbifolds",
    "unsensed_cubic_nonorientable",
    "unsensed_cubic_orientable",
]
