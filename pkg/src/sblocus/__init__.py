"""Exact chamber decompositions of effective cones for spaces of low-degree
rational curves in Grassmannians.

The package computes, over exact rationals, the stable-base-locus chamber
decomposition of the rank-3 effective cone in three regimes (degree 2; degree
3 with k >= 3; degree 3 maps to Grassmannians of lines) and verifies the
result against built-in expected chamber tables.
"""

from .linalg import (
    Cone,
    NSVector,
    SlicePoint,
    SingularSystemError,
    SliceError,
    ZeroRayError,
    membership,
    nonneg_combination,
    ns,
    pair,
    slice_point,
    solve_class,
)
from .catalog import (
    Catalog,
    CatalogError,
    CatalogParseError,
    CatalogValidationError,
    DualityUnavailableError,
    SpaceId,
    canonical_class,
    catalog_from_text,
    catalog_to_text,
    dual_involution,
    dual_partition,
    load,
)
from .arrangement import Arrangement, Chamber, Face, build_arrangement, merge_chambers
from .inference import (
    Decomposition,
    FaceLabel,
    SoundnessError,
    VerificationReport,
    decompose,
    default_decomposition,
    lower_bound,
    verify_theorem,
)
from .figures import FigureSpec, render_svg

__version__ = "1.0.0"

__all__ = [
    "Arrangement",
    "Catalog",
    "CatalogError",
    "CatalogParseError",
    "CatalogValidationError",
    "Chamber",
    "Cone",
    "Decomposition",
    "DualityUnavailableError",
    "Face",
    "FaceLabel",
    "FigureSpec",
    "NSVector",
    "SingularSystemError",
    "SliceError",
    "SlicePoint",
    "SoundnessError",
    "SpaceId",
    "VerificationReport",
    "ZeroRayError",
    "build_arrangement",
    "canonical_class",
    "catalog_from_text",
    "catalog_to_text",
    "decompose",
    "default_decomposition",
    "dual_involution",
    "dual_partition",
    "load",
    "lower_bound",
    "membership",
    "merge_chambers",
    "nonneg_combination",
    "ns",
    "pair",
    "render_svg",
    "slice_point",
    "solve_class",
    "verify_theorem",
]
