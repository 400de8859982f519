"""The three reference cases: an antipodal vertex, a point on a side, and a
polygon that winds twice around the query point."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .sphere import (
    Location,
    SphericalAngles,
    SphericalClassification,
    SphericalPolygon,
)

PI = math.pi
ARCCOS_EIGHTH_DEG = math.degrees(math.acos(1 / 8))


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    polygon_angles: tuple  # (theta, phi) pairs in radians
    point_angles: SphericalAngles
    expected: SphericalClassification

    @property
    def polygon(self) -> SphericalPolygon:
        return SphericalPolygon.from_angles(self.polygon_angles)


def _deg(pairs):
    return tuple((math.radians(t), math.radians(p)) for t, p in pairs)


ANTIPODAL_VERTEX = Fixture(
    "antipodal-vertex",
    "closed octant with -Q as a vertex; Q is outside",
    ((PI / 2, 0.0), (PI, 0.0), (PI / 2, PI / 2)),
    SphericalAngles(0.0, 0.0),
    SphericalClassification.antipode_on_boundary(1),
)

POINT_ON_SIDE = Fixture(
    "point-on-side",
    "isosceles triangle whose third side passes through Q",
    ((PI / 6, 0.0), (PI / 4, PI / 2), (PI / 6, PI)),
    SphericalAngles(0.0, 0.0),
    SphericalClassification.boundary(3),
)

DOUBLE_DIAMOND = Fixture(
    "double-diamond",
    "non-simple 10-gon made of two diamonds, both around Q",
    _deg([(45, ARCCOS_EIGHTH_DEG), (60, 30), (90, 0), (120, 30), (90, 60),
          (45, ARCCOS_EIGHTH_DEG), (90, 30), (120, 60), (90, 90), (60, 60)]),
    SphericalAngles.from_degrees(90, 45),
    SphericalClassification(Location.INTERIOR, 2),
)

FIXTURES = (ANTIPODAL_VERTEX, POINT_ON_SIDE, DOUBLE_DIAMOND)
