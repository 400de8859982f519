"""Slow, independent classification used to cross-check the reductions.

The query point is rotated to the north pole, every side is densely
resampled along its great circle, the samples are mapped to the plane with
the polar projection ``tau`` below, and the winding number is read off the
total turning angle. Boundary hits are detected on the sphere itself rather
than in the plane.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .planar import angle_sum_wn
from .rotation import rotation_to_north
from .sphere import (
    Side,
    SphericalClassification,
    SphericalPolygon,
    ValidationError,
    as_angles,
    chord_midpoint_side,
    on_arcs,
)

ORACLE_TOL = 1e-9
POLE_TOL = 1e-12


@dataclass(frozen=True)
class SubdivisionConfig:
    segments_per_arc: int = 64

    def __post_init__(self):
        if int(self.segments_per_arc) != self.segments_per_arc or self.segments_per_arc < 1:
            raise ValidationError(f"segments_per_arc must be a positive integer, got {self.segments_per_arc!r}")


def stereographic(p, tol: float = POLE_TOL) -> np.ndarray:
    """Polar projection ``tau(p) = 2 cot(theta/2) [x, y]``.

    With ``[x, y] = sin(theta) [cos(phi), sin(phi)]`` this simplifies to
    ``2 (1 + cos(theta)) [cos(phi), sin(phi)]``, which is how it is
    evaluated (no cancellation anywhere away from the poles). The image of
    the sphere minus both poles is the punctured open disk of radius 4: the
    south pole would go to the origin and the north pole has no limit, so
    both are rejected. Points on one meridian land on one ray from the
    origin.

    Accepts a single point or an ``(n, 3)`` array.
    """
    p = np.asarray(p, dtype=float)
    single = p.ndim == 1
    p = np.atleast_2d(p)
    rho = np.hypot(p[:, 0], p[:, 1])
    if np.any(rho <= tol):
        raise ValidationError("stereographic projection is undefined at the poles")
    scale = 2.0 * (1.0 + p[:, 2]) / rho
    out = p[:, :2] * scale[:, None]
    return out[0] if single else out


def slerp(a, b, count: int) -> np.ndarray:
    """``count + 1`` points evenly spaced along the minor arc from ``a`` to ``b``, ends exact."""
    return _slerp_many(np.reshape(a, (1, 3)), np.reshape(b, (1, 3)), count)[0]


def _slerp_many(a: np.ndarray, b: np.ndarray, count: int) -> np.ndarray:
    """``(m, count + 1, 3)`` samples along each of the ``m`` arcs ``a[k] -> b[k]``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    omega = np.arctan2(np.linalg.norm(np.cross(a, b), axis=1), np.einsum("ij,ij->i", a, b))
    t = np.linspace(0.0, 1.0, count + 1)
    wa = np.sin(np.outer(omega, 1 - t)) / np.sin(omega)[:, None]
    wb = np.sin(np.outer(omega, t)) / np.sin(omega)[:, None]
    pts = wa[:, :, None] * a[:, None, :] + wb[:, :, None] * b[:, None, :]
    pts[:, 0] = a
    pts[:, -1] = b
    return pts


def subdivide(vertices, segments_per_arc: int) -> np.ndarray:
    """Closed polyline through all sides, each split into ``segments_per_arc`` chords.

    The last point of each side is dropped since it starts the next side.
    """
    v = np.asarray(vertices, dtype=float)
    pts = _slerp_many(v, np.roll(v, -1, axis=0), segments_per_arc)[:, :-1]
    return pts.reshape(-1, 3)


def classify_by_subdivision(g: SphericalPolygon, q, cfg: SubdivisionConfig = SubdivisionConfig(),
                            tol: float = ORACLE_TOL) -> SphericalClassification:
    """Classify ``q`` against ``g`` by resampling and summing turning angles.

    ``tol`` is an angular distance: a side passing within ``tol`` of ``+-q``
    is treated as a boundary hit. O(n * segments_per_arc) per call.
    """
    rot = rotation_to_north(as_angles(q))
    a = rot.apply(g.vertices)
    b = np.roll(a, -1, axis=0)
    north = np.broadcast_to([0.0, 0.0, 1.0], a.shape)
    hits = np.flatnonzero(on_arcs(north, a, b, tol) | on_arcs(-north, a, b, tol))
    if hits.size:
        i = int(hits[0])
        if chord_midpoint_side(a[i], b[i], north[0], tol) is Side.Q:
            return SphericalClassification.boundary(i + 1)
        return SphericalClassification.antipode_on_boundary(i + 1)
    samples = subdivide(a, cfg.segments_per_arc)
    return SphericalClassification.from_wn(angle_sum_wn(stereographic(samples)))
