"""Points, polygons and predicates on the unit sphere.

Angles follow the physics convention: ``theta`` is the polar angle measured
from the north pole ``N = [0, 0, 1]`` and ``phi`` the azimuth, so that

    (theta, phi) -> [sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)]

Every polygon side is the *minor* great-circle arc between consecutive
vertices.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

NORM_TOL = 1e-9
HEMISPHERE_EPS = 1e-9


class SpipError(ValueError):
    """Base class for all errors raised by this package."""


class ValidationError(SpipError):
    """Input geometry violates a precondition (unit norm, degenerate side...)."""


class DegenerateError(SpipError):
    """A boundary hit could not be attributed to either Q or its antipode.

    This only happens when the polygon is not BAE, i.e. its boundary meets
    its own antipodal image.
    """


@dataclass(frozen=True)
class SphericalAngles:
    theta: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValidationError(f"non-finite angles {self.theta!r}, {self.phi!r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValidationError(f"polar angle {self.theta!r} outside [0, pi]")

    @classmethod
    def from_degrees(cls, theta: float, phi: float) -> "SphericalAngles":
        return cls(math.radians(theta), math.radians(phi))


@dataclass(frozen=True)
class UnitVector3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if not math.isfinite(norm) or abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(
                f"({self.x!r}, {self.y!r}, {self.z!r}) is not a unit vector (norm {norm!r})"
            )

    @classmethod
    def from_array(cls, v, normalize: bool = False) -> "UnitVector3":
        v = np.asarray(v, dtype=float).reshape(3)
        if normalize:
            n = np.linalg.norm(v)
            if not np.isfinite(n) or n == 0.0:
                raise ValidationError(f"cannot normalize {v.tolist()!r}")
            v = v / n
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @property
    def array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def __array__(self, dtype=None, copy=None):
        return np.array([self.x, self.y, self.z], dtype=dtype)

    def __neg__(self) -> "UnitVector3":
        return UnitVector3(-self.x, -self.y, -self.z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def from_angles(a: SphericalAngles) -> UnitVector3:
    """Cartesian coordinates of the point with polar angle ``a.theta`` and azimuth ``a.phi``."""
    st = math.sin(a.theta)
    return UnitVector3(st * math.cos(a.phi), st * math.sin(a.phi), math.cos(a.theta))


def to_angles(p) -> SphericalAngles:
    """Inverse of :func:`from_angles`; ``phi`` is returned in (-pi, pi].

    The polar angle is taken from ``atan2`` rather than ``acos`` so it stays
    accurate next to the poles.
    """
    x, y, z = (float(c) for c in np.asarray(p, dtype=float).reshape(3))
    return SphericalAngles(math.atan2(math.hypot(x, y), z), math.atan2(y, x))


def antipode(p: UnitVector3) -> UnitVector3:
    return -p


def _unit_rows(vertices) -> np.ndarray:
    arr = np.asarray(vertices, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValidationError(f"expected an (n, 3) array of vertices, got shape {arr.shape}")
    return arr


class SphericalPolygon:
    """Ordered vertex list of a spherical n-gon.

    Construction checks the basic invariants (n >= 3, unit vertices, no
    repeated or antipodal consecutive vertices). Whether the polygon is BAE
    is *not* checked here since that costs O(n^2); see :func:`validate`.
    """

    __slots__ = ("_vertices",)

    def __init__(self, vertices, normalize: bool = False, tol: float = NORM_TOL):
        arr = _unit_rows(vertices).copy()
        if len(arr) < 3:
            raise ValidationError(f"a spherical polygon needs at least 3 vertices, got {len(arr)}")
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.all(np.isfinite(arr), axis=1))[0])
            raise ValidationError(f"vertex {bad + 1} has non-finite coordinates")
        norms = np.linalg.norm(arr, axis=1)
        if normalize:
            if np.any(norms == 0.0):
                bad = int(np.flatnonzero(norms == 0.0)[0])
                raise ValidationError(f"vertex {bad + 1} is the zero vector")
            arr /= norms[:, None]
        else:
            off = np.flatnonzero(np.abs(norms - 1.0) > tol)
            if off.size:
                i = int(off[0])
                raise ValidationError(
                    f"vertex {i + 1} {arr[i].tolist()} is not unit length (norm {float(norms[i])!r})"
                )
        bad_edges = _degenerate_edges(arr, tol)
        if bad_edges:
            i, why = bad_edges[0]
            raise ValidationError(f"side {i} is degenerate: {why}")
        arr.setflags(write=False)
        self._vertices = arr

    @classmethod
    def from_angles(cls, angles: Iterable, degrees: bool = False) -> "SphericalPolygon":
        rows = []
        for a in angles:
            if not isinstance(a, SphericalAngles):
                a = SphericalAngles.from_degrees(*a) if degrees else SphericalAngles(*a)
            rows.append(list(from_angles(a)))
        return cls(rows)

    @property
    def vertices(self) -> np.ndarray:
        """Read-only ``(n, 3)`` array."""
        return self._vertices

    def __len__(self):
        return len(self._vertices)

    def __getitem__(self, i) -> UnitVector3:
        return UnitVector3.from_array(self._vertices[i])

    def edges(self):
        """Yield ``(i, start, end)`` with 1-based side index ``i``."""
        v = self._vertices
        n = len(v)
        for i in range(n):
            yield i + 1, v[i], v[(i + 1) % n]

    def transformed(self, matrix) -> "SphericalPolygon":
        """Apply an orthogonal 3x3 matrix to every vertex."""
        return SphericalPolygon(self._vertices @ np.asarray(matrix, dtype=float).T)

    def reversed(self) -> "SphericalPolygon":
        return SphericalPolygon(self._vertices[::-1])

    def __repr__(self):
        return f"SphericalPolygon({self._vertices.tolist()!r})"


def _degenerate_edges(arr: np.ndarray, tol: float) -> list[tuple[int, str]]:
    nxt = np.roll(arr, -1, axis=0)
    out = []
    for i in range(len(arr)):
        if np.linalg.norm(arr[i] - nxt[i]) <= tol:
            out.append((i + 1, "consecutive vertices coincide"))
        elif np.linalg.norm(arr[i] + nxt[i]) <= tol:
            out.append((i + 1, "consecutive vertices are antipodal"))
    return out


# -- arcs --------------------------------------------------------------------

def on_arcs(p, a, b, tol):
    """Row-wise :func:`point_on_arc` for ``(m, 3)`` arrays."""
    n = np.cross(a, b)
    n /= np.linalg.norm(n, axis=-1, keepdims=True)
    on_circle = np.abs(np.einsum("...i,...i", p, n)) <= tol
    # with p on the great circle, these are the sines of the angles a->p and p->b
    after_a = np.einsum("...i,...i", np.cross(a, p), n) >= -tol
    before_b = np.einsum("...i,...i", np.cross(p, b), n) >= -tol
    return on_circle & after_a & before_b


def _check_arcs(a, b, tol):
    if np.any(np.linalg.norm(a - b, axis=-1) <= tol) or np.any(np.linalg.norm(a + b, axis=-1) <= tol):
        raise ValidationError("arc endpoints are identical or antipodal")


def point_on_arc(p, a, b, tol: float = 1e-12) -> bool:
    """True if ``p`` lies on the minor arc from ``a`` to ``b`` up to angular ``tol``."""
    p, a, b = (np.asarray(v, dtype=float).reshape(1, 3) for v in (p, a, b))
    if np.linalg.norm(np.cross(a, b)) == 0.0:
        raise ValidationError("arc endpoints are identical or antipodal")
    return bool(on_arcs(p, a, b, tol)[0])


def arcs_intersect_many(a1, a2, b1, b2, tol: float = 1e-12) -> np.ndarray:
    """Row-wise :func:`arcs_intersect` over ``(m, 3)`` endpoint arrays."""
    a1, a2, b1, b2 = (np.atleast_2d(np.asarray(v, dtype=float)) for v in (a1, a2, b1, b2))
    _check_arcs(a1, a2, tol)
    _check_arcs(b1, b2, tol)
    hit = (on_arcs(b1, a1, a2, tol) | on_arcs(b2, a1, a2, tol)
           | on_arcs(a1, b1, b2, tol) | on_arcs(a2, b1, b2, tol))
    na = np.cross(a1, a2)
    nb = np.cross(b1, b2)
    line = np.cross(na, nb)
    ln = np.linalg.norm(line, axis=-1)
    # same great circle: only the endpoint tests above can succeed
    crossing = ln > tol * np.linalg.norm(na, axis=-1) * np.linalg.norm(nb, axis=-1)
    if np.any(crossing):
        c = line[crossing] / ln[crossing, None]
        a1c, a2c, b1c, b2c = a1[crossing], a2[crossing], b1[crossing], b2[crossing]
        inner = ((on_arcs(c, a1c, a2c, tol) & on_arcs(c, b1c, b2c, tol))
                 | (on_arcs(-c, a1c, a2c, tol) & on_arcs(-c, b1c, b2c, tol)))
        hit[crossing] |= inner
    return hit


def arcs_intersect(a1, a2, b1, b2, tol: float = 1e-12) -> bool:
    """Do the minor arcs ``a1a2`` and ``b1b2`` share a point? Touching counts.

    The two great circles meet at ``+-c`` with ``c`` along the cross product
    of their normals; the arcs meet iff one of those lies on both arcs, or
    (for arcs on a common circle) an endpoint of one lies on the other.
    """
    return bool(arcs_intersect_many(a1, a2, b1, b2, tol)[0])


def is_bae(g: SphericalPolygon, tol: float = 1e-12) -> tuple[bool, list[tuple[int, int]]]:
    """Check that the boundary of ``g`` never meets its antipodal image.

    Every side is tested against the antipode of every side, so this is
    O(n^2). Returns the verdict and the offending 1-based ``(i, j)`` pairs,
    meaning side ``i`` meets the antipode of side ``j``.
    """
    v = g.vertices
    w = np.roll(v, -1, axis=0)
    n = len(v)
    i, j = np.divmod(np.arange(n * n), n)
    hit = arcs_intersect_many(v[i], w[i], -v[j], -w[j], tol)
    failing = [(int(a) + 1, int(b) + 1) for a, b in zip(i[hit], j[hit])]
    return not failing, failing


def is_hemisphere_contained(g: SphericalPolygon, eps: float = HEMISPHERE_EPS) -> Optional[UnitVector3]:
    """Find a pole ``w`` whose open hemisphere contains every vertex of ``g``.

    Solves the LP ``max t  s.t.  w . v_i >= t,  -1 <= w <= 1`` and accepts
    when ``t > eps``. Vertices in an open hemisphere suffice: every side is a
    minor arc, and a minor arc between two points of an open hemisphere stays
    inside it, so the whole boundary (and the region it bounds on that side)
    is contained as well.
    """
    v = g.vertices
    n = len(v)
    # variables: w0, w1, w2, t; minimize -t
    c = np.array([0.0, 0.0, 0.0, -1.0])
    a_ub = np.hstack([-v, np.ones((n, 1))])
    res = linprog(c, A_ub=a_ub, b_ub=np.zeros(n),
                  bounds=[(-1, 1)] * 3 + [(None, 1)], method="highs")
    if res.status != 0 or -res.fun <= eps:
        return None
    w = res.x[:3] / np.linalg.norm(res.x[:3])
    if np.min(v @ w) <= 0.0:
        return None
    return UnitVector3.from_array(w)


@dataclass(frozen=True)
class ValidationReport:
    is_unit: bool
    edges_ok: bool
    is_bae: bool
    is_hc: bool
    hc_witness: Optional[UnitVector3] = None
    failing_edge_pairs: list = field(default_factory=list)
    reasons: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_unit and self.edges_ok and self.is_bae


def validate(vertices, tol: float = 1e-12, norm_tol: float = NORM_TOL) -> ValidationReport:
    """Full report on a candidate vertex list, without raising."""
    if isinstance(vertices, SphericalPolygon):
        vertices = vertices.vertices
    arr = _unit_rows(vertices)
    reasons = []
    if len(arr) < 3:
        reasons.append(f"only {len(arr)} vertices")
    finite = np.all(np.isfinite(arr), axis=1)
    norms = np.linalg.norm(arr, axis=1)
    unit = finite & (np.abs(norms - 1.0) <= norm_tol)
    for i in np.flatnonzero(~unit):
        reasons.append(f"vertex {i + 1} {arr[i].tolist()} is not unit length")
    is_unit = bool(np.all(unit))
    bad_edges = _degenerate_edges(arr, norm_tol) if is_unit else []
    reasons.extend(f"side {i}: {why}" for i, why in bad_edges)
    edges_ok = is_unit and not bad_edges and len(arr) >= 3
    if not edges_ok:
        return ValidationReport(is_unit, edges_ok, False, False, reasons=reasons)
    g = SphericalPolygon(arr, tol=norm_tol)
    bae, failing = is_bae(g, tol)
    if not bae:
        reasons.append(f"boundary meets its antipode at side pairs {failing}")
    witness = is_hemisphere_contained(g)
    return ValidationReport(True, True, bae, witness is not None, witness, failing, reasons)


# -- disambiguation ------------------------------------------------------------

class Side(enum.Enum):
    Q = "q"
    ANTIPODE = "antipode"


def midpoint_sign_side(s: float, tol: float) -> Side:
    """Map the sign of ``q . (v_i + v_j)`` (or a proxy with the same sign) to a side."""
    if abs(s) <= tol:
        raise DegenerateError(
            f"chord midpoint is orthogonal to the query axis (q.(vi+vj) = {s!r}); "
            "the polygon is not BAE"
        )
    return Side.Q if s > 0 else Side.ANTIPODE


def chord_midpoint_side(vi, vj, q, tol: float = 1e-12) -> Side:
    """Decide whether ``q`` or ``-q`` lies on a minor arc known to meet the ``+-q`` axis.

    The midpoint of the chord ``vi vj`` falls in the open hemisphere centred
    on whichever of ``+-q`` the arc actually contains.
    """
    s = float(np.asarray(q, dtype=float) @ (np.asarray(vi, dtype=float) + np.asarray(vj, dtype=float)))
    return midpoint_sign_side(s, tol)


# -- outcome -------------------------------------------------------------------

class Location(enum.Enum):
    BOUNDARY = "boundary"
    INTERIOR = "interior"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class SphericalClassification:
    """Where a query point sits relative to a spherical polygon.

    ``wn`` is the winding number for interior/exterior results and ``None``
    on the boundary. When the *antipode* of the query point was found on
    side ``i``, the result is exterior with ``antipode_edge = i`` and
    ``wn = 0``; that zero is a placeholder, not a computed winding number.
    """

    location: Location
    wn: Optional[int] = None
    edge_index: Optional[int] = None
    antipode_edge: Optional[int] = None

    @classmethod
    def boundary(cls, edge_index: int) -> "SphericalClassification":
        return cls(Location.BOUNDARY, None, edge_index)

    @classmethod
    def from_wn(cls, wn: int) -> "SphericalClassification":
        return cls(Location.INTERIOR if wn > 0 else Location.EXTERIOR, wn)

    @classmethod
    def antipode_on_boundary(cls, edge_index: int) -> "SphericalClassification":
        return cls(Location.EXTERIOR, 0, None, edge_index)

    @property
    def wn_defined(self) -> bool:
        return self.location is not Location.BOUNDARY and self.antipode_edge is None

    def __str__(self):
        if self.location is Location.BOUNDARY:
            return f"boundary({self.edge_index})"
        if self.antipode_edge is not None:
            return f"exterior(-Q on side {self.antipode_edge})"
        return f"{self.location.value}({self.wn})"


def as_vector(q) -> np.ndarray:
    """Cartesian array for a UnitVector3, SphericalAngles or 3-sequence."""
    if isinstance(q, SphericalAngles):
        q = from_angles(q)
    return np.asarray(q, dtype=float).reshape(3)


def as_angles(q) -> SphericalAngles:
    if isinstance(q, SphericalAngles):
        return q
    return to_angles(q)


def random_unit_vectors(rng: np.random.Generator, size: int) -> np.ndarray:
    v = rng.normal(size=(size, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def random_cap_points(rng: np.random.Generator, center: Sequence[float], radius: float, size: int) -> np.ndarray:
    """Points distributed uniformly (by area) in the closed cap of angular ``radius``."""
    center = np.asarray(center, dtype=float)
    center = center / np.linalg.norm(center)
    cos_r = math.cos(radius)
    z = rng.uniform(cos_r, 1.0, size)
    az = rng.uniform(0.0, 2 * math.pi, size)
    s = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    local = np.stack([s * np.cos(az), s * np.sin(az), z], axis=1)
    helper = np.array([1.0, 0.0, 0.0]) if abs(center[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(helper, center)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(center, e1)
    return local @ np.stack([e1, e2, center])
