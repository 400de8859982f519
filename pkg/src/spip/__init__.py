"""Point-in-polygon on the unit sphere for polygons whose boundary avoids its antipode.

Two reductions to a planar winding-number test are provided, one by
rotation (:mod:`spip.rotation`) and one by shearing (:mod:`spip.shearing`),
plus a slow independent oracle (:mod:`spip.oracle`) for cross-checking.
"""
from .oracle import SubdivisionConfig, classify_by_subdivision
from .planar import PlanarState, angle_sum_wn, classify_origin
from .sphere import (
    DegenerateError,
    Location,
    Side,
    SphericalAngles,
    SphericalClassification,
    SphericalPolygon,
    SpipError,
    UnitVector3,
    ValidationError,
    ValidationReport,
    antipode,
    arcs_intersect,
    chord_midpoint_side,
    from_angles,
    is_bae,
    is_hemisphere_contained,
    to_angles,
    validate,
)

__version__ = "0.1.0"
