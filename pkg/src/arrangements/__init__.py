"""Exact arrangements of construction lines and registration marks."""

from .arrangement import (
    Arrangement,
    FamilyKind,
    Segment,
    Shape,
    ValidationReport,
    canonicalize_shape,
    from_lines,
    from_shape,
    generate_family,
    parallel_family,
    pencil,
    validate,
)
from .enumeration import enumerate_arrangements, grid_oracle, verify_conjecture
from .geometry import Line, Point, Slope, between, intersect, line_through, orientation, slope_of
from .invariants import (
    canonical_code,
    classify,
    find_centrexes,
    is_isomorphic,
    is_linear_space,
    projective_equivalent,
    summary_triple,
    type_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "FamilyKind",
    "Line",
    "Point",
    "Segment",
    "Shape",
    "Slope",
    "ValidationReport",
    "between",
    "canonical_code",
    "canonicalize_shape",
    "classify",
    "enumerate_arrangements",
    "find_centrexes",
    "from_lines",
    "from_shape",
    "generate_family",
    "grid_oracle",
    "intersect",
    "is_isomorphic",
    "is_linear_space",
    "line_through",
    "orientation",
    "parallel_family",
    "pencil",
    "projective_equivalent",
    "slope_of",
    "summary_triple",
    "type_vectors",
    "validate",
    "verify_conjecture",
]
