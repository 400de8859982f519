"""Winding number of a planar polygon about the origin, with boundary detection.

This is Sunday's crossing-rule winding number test, specialised to the
origin, plus an up-front check for the origin lying on a side.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .sphere import Location, ValidationError

PLANAR_TOL = 1e-12


@dataclass(frozen=True)
class PlanarState:
    """Outcome of :func:`classify_origin`. ``edge_index`` is 1-based."""

    location: Location
    wn: Optional[int] = None
    edge_index: Optional[int] = None

    @classmethod
    def on_boundary(cls, edge_index: int) -> "PlanarState":
        return cls(Location.BOUNDARY, None, edge_index)

    @classmethod
    def from_wn(cls, wn: int) -> "PlanarState":
        return cls(Location.INTERIOR if wn > 0 else Location.EXTERIOR, wn)


def as_planar(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError(f"expected an (n, 2) array of planar points, got shape {arr.shape}")
    if len(arr) < 3:
        raise ValidationError(f"a polygon needs at least 3 vertices, got {len(arr)}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("planar polygon has non-finite coordinates")
    return arr


def origin_on_segment(xi, yi, xj, yj, tol: float = PLANAR_TOL) -> bool:
    """Is the origin on the closed segment (xi, yi)-(xj, yj)?

    Comparisons are relative to the squared coordinate magnitude of the
    segment, so the answer does not change under uniform scaling.
    """
    scale = max(abs(xi), abs(yi), abs(xj), abs(yj))
    if scale == 0.0:
        return True
    eps = tol * scale * scale
    return (abs(xi * yj - yi * xj) <= eps
            and xi * xj <= eps
            and yi * yj <= eps)


def classify_origin(g, tol: float = PLANAR_TOL) -> PlanarState:
    """Locate the origin relative to the closed polygon ``g`` (an ``(n, 2)`` array).

    The first side (in vertex order) that contains the origin is reported as
    a boundary hit. Otherwise the winding number is accumulated over *all*
    sides: an upward crossing of the positive x-axis with the origin strictly
    to the left counts +1, a downward one with the origin strictly to the
    right counts -1. A positive total means interior.
    """
    pts = as_planar(g).tolist()
    n = len(pts)
    wn = 0
    for i in range(n):
        xi, yi = pts[i]
        xj, yj = pts[(i + 1) % n]
        if xi == xj and yi == yj:
            # zero-length side: no crossing; the vertex itself is checked by its neighbours
            if xi == 0.0 and yi == 0.0:
                return PlanarState.on_boundary(i + 1)
            continue
        if origin_on_segment(xi, yi, xj, yj, tol):
            return PlanarState.on_boundary(i + 1)
        if yi <= 0.0:
            if yj > 0.0 and xi * (yj - yi) - (xj - xi) * yi > 0.0:
                wn += 1
        elif yj <= 0.0 and xi * (yj - yi) - (xj - xi) * yi < 0.0:
            wn -= 1
    return PlanarState.from_wn(wn)


def signed_angles(g) -> np.ndarray:
    """Signed angle in (-pi, pi] subtended at the origin by each side of ``g``."""
    p = as_planar(g)
    q = np.roll(p, -1, axis=0)
    cross = p[:, 0] * q[:, 1] - p[:, 1] * q[:, 0]
    dot = np.einsum("ij,ij->i", p, q)
    return np.arctan2(cross, dot)


def _origin_on_segments(p: np.ndarray, q: np.ndarray, tol: float) -> np.ndarray:
    """Row-wise :func:`origin_on_segment`."""
    scale = np.max(np.abs(np.hstack([p, q])), axis=1)
    eps = tol * scale * scale
    cross = p[:, 0] * q[:, 1] - p[:, 1] * q[:, 0]
    return ((np.abs(cross) <= eps) & (p[:, 0] * q[:, 0] <= eps) & (p[:, 1] * q[:, 1] <= eps))


def angle_sum_wn(g, tol: float = PLANAR_TOL) -> int:
    """Winding number about the origin as the total turning angle over 2 pi.

    Slow reference path: needs one ``atan2`` per side. Raises if a vertex
    sits on the origin or a side passes through it, where the angle is
    undefined.
    """
    p = as_planar(g)
    at_origin = np.flatnonzero(np.all(p == 0.0, axis=1))
    if at_origin.size:
        raise ValidationError(f"vertex {at_origin[0] + 1} is at the origin")
    through = np.flatnonzero(_origin_on_segments(p, np.roll(p, -1, axis=0), tol))
    if through.size:
        raise ValidationError(f"side {through[0] + 1} passes through the origin")
    total = float(np.sum(signed_angles(p))) / (2 * math.pi)
    wn = round(total)
    if abs(total - wn) >= 1e-6:
        raise ValidationError(f"turning angle sum {total!r} is not an integer multiple of 2 pi")
    return int(wn)
