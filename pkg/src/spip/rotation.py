"""Rotation-based reduction: turn Q into the north pole, then drop z."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .planar import PLANAR_TOL, classify_origin
from .sphere import (
    Location,
    Side,
    SphericalAngles,
    SphericalClassification,
    SphericalPolygon,
    as_angles,
    midpoint_sign_side,
)


@dataclass(frozen=True)
class RotationMatrix3:
    """Rodrigues rotation about ``axis`` that carries the query point to ``N``.

    ``skew`` is the cross-product matrix of ``axis``. The matrix is a proper
    rotation (SO(3)); it is safe to share between threads.
    """

    matrix: np.ndarray
    axis: np.ndarray
    skew: np.ndarray

    def apply(self, points) -> np.ndarray:
        """Rotate an ``(n, 3)`` array of points in one product."""
        return np.asarray(points, dtype=float) @ self.matrix.T

    def __matmul__(self, other):
        return self.matrix @ other


def rotation_to_north(q_angles: SphericalAngles) -> RotationMatrix3:
    """Rotation ``R`` with ``R @ from_angles(q_angles) == [0, 0, 1]``.

    The axis ``[sin(phi), -cos(phi), 0]`` is horizontal and perpendicular to
    the meridian of Q, and the angle is the polar angle itself. At
    ``theta = pi`` this is a half turn about that axis, which is fine for any
    ``phi``.
    """
    theta, phi = q_angles.theta, q_angles.phi
    kx, ky, kz = math.sin(phi), -math.cos(phi), 0.0
    k = np.array([kx, ky, kz])
    skew = np.array([[0.0, -kz, ky],
                     [kz, 0.0, -kx],
                     [-ky, kx, 0.0]])
    r = np.eye(3) + math.sin(theta) * skew + (1.0 - math.cos(theta)) * (skew @ skew)
    for a in (r, k, skew):
        a.setflags(write=False)
    return RotationMatrix3(r, k, skew)


def project(g: SphericalPolygon, rot: RotationMatrix3) -> np.ndarray:
    """Rotated vertices as an ``(n, 3)`` array; the planar polygon is ``[:, :2]``."""
    return rot.apply(g.vertices)


def classify_rotated(rotated: np.ndarray, tol: float = PLANAR_TOL) -> SphericalClassification:
    """Finish the reduction given vertices already rotated so that Q is ``N``."""
    state = classify_origin(rotated[:, :2], tol)
    if state.location is Location.BOUNDARY:
        i = state.edge_index
        j = i % len(rotated) + 1
        zbar = 0.5 * (rotated[i - 1, 2] + rotated[j - 1, 2])
        if midpoint_sign_side(float(zbar), tol) is Side.Q:
            return SphericalClassification.boundary(i)
        return SphericalClassification.antipode_on_boundary(i)
    return SphericalClassification.from_wn(state.wn)


def classify(g: SphericalPolygon, q, tol: float = PLANAR_TOL,
             rotation: RotationMatrix3 | None = None) -> SphericalClassification:
    """Classify ``q`` against the BAE polygon ``g``.

    ``q`` may be given as :class:`SphericalAngles` (used directly) or in
    Cartesian form, which is converted with ``atan2``. Pass a precomputed
    ``rotation`` to reuse it across many polygons for the same query point.

    BAE-ness of ``g`` is assumed, not checked. If a boundary hit cannot be
    attributed to either Q or -Q, :class:`~spip.sphere.DegenerateError` is raised.
    """
    if rotation is None:
        rotation = rotation_to_north(as_angles(q))
    return classify_rotated(project(g, rotation), tol)
