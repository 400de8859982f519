"""Shearing-based reduction.

Instead of rotating, shear along the coordinate axis closest to ``+-Q`` so
the Q-axis becomes that coordinate axis, then read off the two remaining
coordinates. The order of those two coordinates depends on the sign of the
dominant component of Q and keeps the projected polygon's orientation as
seen from Q.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .planar import PLANAR_TOL, classify_origin
from .sphere import (
    Location,
    Side,
    SphericalClassification,
    SphericalPolygon,
    as_vector,
    midpoint_sign_side,
)


class Axis(enum.IntEnum):
    X = 0
    Y = 1
    Z = 2


# (columns fed to the planar test when the dominant component is positive, negative)
_COLUMNS = {
    Axis.X: ((1, 2), (2, 1)),
    Axis.Y: ((2, 0), (0, 2)),
    Axis.Z: ((0, 1), (1, 0)),
}


@dataclass(frozen=True)
class ShearPlan:
    """Shear chosen for one query point ``q = (a, b, c)``.

    ``coefficients`` are the two ratios of the minor components to the
    dominant one, in coordinate order (``b/a, c/a`` for X; ``a/b, c/b`` for
    Y; ``a/c, b/c`` for Z). The dominant component has magnitude at least
    ``1/sqrt(3)``, so these are always finite.
    """

    axis: Axis
    positive: bool
    coefficients: tuple[float, float]
    q: tuple[float, float, float]

    @property
    def matrix(self) -> np.ndarray:
        m = np.eye(3)
        d = int(self.axis)
        others = [k for k in range(3) if k != d]
        for k, coef in zip(others, self.coefficients):
            m[k, d] = -coef
        return m

    @property
    def columns(self) -> tuple[int, int]:
        pos, neg = _COLUMNS[self.axis]
        return pos if self.positive else neg

    @property
    def dominant(self) -> float:
        return self.q[int(self.axis)]


def plan_shear(q) -> ShearPlan:
    a, b, c = (float(t) for t in as_vector(q))
    if abs(a) >= abs(b) and abs(a) >= abs(c):
        return ShearPlan(Axis.X, a > 0, (b / a, c / a), (a, b, c))
    if abs(b) >= abs(c):
        return ShearPlan(Axis.Y, b > 0, (a / b, c / b), (a, b, c))
    return ShearPlan(Axis.Z, c > 0, (a / c, b / c), (a, b, c))


def shear(points, plan: ShearPlan) -> np.ndarray:
    """Apply the plan's shear to an ``(n, 3)`` array of points."""
    p = np.array(points, dtype=float)
    d = int(plan.axis)
    others = [k for k in range(3) if k != d]
    for k, coef in zip(others, plan.coefficients):
        p[:, k] -= coef * p[:, d]
    return p


def shear_project(g: SphericalPolygon, q, plan: ShearPlan | None = None) -> np.ndarray:
    """Planar ``(n, 2)`` polygon fed to the winding-number test."""
    if plan is None:
        plan = plan_shear(q)
    return shear(g.vertices, plan)[:, list(plan.columns)]


def classify(g: SphericalPolygon, q, tol: float = PLANAR_TOL,
             plan: ShearPlan | None = None) -> SphericalClassification:
    """Classify ``q`` against the BAE polygon ``g`` via the shear projection.

    A boundary hit on side ``i`` is attributed to Q or -Q by the sign of
    ``q . (v_i + v_j)`` on the original, unsheared vertices.
    """
    if plan is None:
        plan = plan_shear(q)
    v = g.vertices
    state = classify_origin(shear(v, plan)[:, list(plan.columns)], tol)
    if state.location is Location.BOUNDARY:
        i = state.edge_index
        j = i % len(v) + 1
        s = float(np.dot(plan.q, v[i - 1] + v[j - 1]))
        if midpoint_sign_side(s, tol) is Side.Q:
            return SphericalClassification.boundary(i)
        return SphericalClassification.antipode_on_boundary(i)
    return SphericalClassification.from_wn(state.wn)
