"""Polyharmonic mappings of the unit disk: coefficient classes, geometric
certificates, coefficient-functional sweeps, and disk-image rendering."""

from .classify import (
    KINDS,
    CoefficientBoundReport,
    CoefficientBoundRow,
    MembershipReport,
    coefficient_bounds,
    convex_membership,
    membership,
    sample_member,
    starlike_membership,
)
from .close_to_convex import (
    WITNESS_KINDS,
    CloseToConvexMap,
    FeketeSzegoResult,
    HerglotzMeasure,
    SweepRow,
    extremal_witness,
    fekete_szego,
    fekete_szego_sweep,
    sample_pool,
    verify_condition,
)
from .core import (
    DEFAULT_TRUNCATION,
    HarmonicLayer,
    LayeredMap,
    PolarPoint,
    PolyharmonicMap,
    PowerSeries,
    apply_L,
    jacobian,
    rotated,
    theta_derivative_check,
)
from .geometry import (
    AngleSearchResult,
    CertificateReport,
    DenominatorCollapse,
    PolarGrid,
    angle_condition_min,
    angle_witness_search,
    convex_certificate,
    origin_ratio_bound,
    sense_preserving_check,
    starlike_certificate,
)
from .mapspec import SpecDocumentError, parse_spec, serialize
from .render import RenderConfig, polyline_is_simple, render_disk_image, sample_circle

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TRUNCATION",
    "KINDS",
    "WITNESS_KINDS",
    "AngleSearchResult",
    "CertificateReport",
    "CloseToConvexMap",
    "CoefficientBoundReport",
    "CoefficientBoundRow",
    "DenominatorCollapse",
    "FeketeSzegoResult",
    "HarmonicLayer",
    "HerglotzMeasure",
    "LayeredMap",
    "MembershipReport",
    "PolarGrid",
    "PolarPoint",
    "PolyharmonicMap",
    "PowerSeries",
    "RenderConfig",
    "SpecDocumentError",
    "SweepRow",
    "angle_condition_min",
    "angle_witness_search",
    "apply_L",
    "coefficient_bounds",
    "convex_certificate",
    "convex_membership",
    "extremal_witness",
    "fekete_szego",
    "fekete_szego_sweep",
    "jacobian",
    "membership",
    "origin_ratio_bound",
    "parse_spec",
    "polyline_is_simple",
    "render_disk_image",
    "rotated",
    "sample_circle",
    "sample_member",
    "sample_pool",
    "sense_preserving_check",
    "serialize",
    "starlike_certificate",
    "starlike_membership",
    "theta_derivative_check",
    "verify_condition",
    "__version__",
]
