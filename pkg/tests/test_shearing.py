import math

import numpy as np
import pytest

from spip import rotation, shearing
from spip.fixtures import ANTIPODAL_VERTEX, DOUBLE_DIAMOND, POINT_ON_SIDE
from spip.planar import origin_on_segment, signed_angles
from spip.shearing import Axis, plan_shear, shear_project
from spip.sphere import (
    SphericalClassification,
    SphericalPolygon,
    random_unit_vectors,
)

from instances import arc_distance, random_instances

S3 = 1 / math.sqrt(3)


@pytest.mark.parametrize("q, axis, positive", [
    ([0, 0, 1], Axis.Z, True),
    ([-1, 0, 0], Axis.X, False),
    ([S3, S3, S3], Axis.X, True),
    ([0, S3 * 1.2, -S3 * 1.2 + 1e-9], Axis.Y, True),
    ([0.6, -0.8, 0.0], Axis.Y, False),
])
def test_plan_shear(q, axis, positive):
    q = np.asarray(q, float)
    plan = plan_shear(q / np.linalg.norm(q))
    assert (plan.axis, plan.positive) == (axis, positive)


def test_plan_coefficients_and_matrix():
    plan = plan_shear([S3, S3, S3])
    assert plan.coefficients == (1.0, 1.0)
    m = plan.matrix
    np.testing.assert_allclose(m @ [S3, S3, S3], [S3, 0, 0], atol=1e-16)


def square_around_north():
    t = [k * math.pi / 2 + 0.3 for k in range(4)]
    return SphericalPolygon.from_angles([(0.4, a) for a in t])


def test_project_from_north_is_xy():
    g = square_around_north()
    np.testing.assert_array_equal(shear_project(g, [0, 0, 1]), g.vertices[:, :2])


def test_project_from_south_swaps_columns():
    g = square_around_north()
    out = shear_project(g, [0, 0, -1])
    np.testing.assert_array_equal(out, g.vertices[:, [1, 0]])
    # orientation flips, so the winding sign flips
    assert np.sum(signed_angles(out)) == pytest.approx(-np.sum(signed_angles(g.vertices[:, :2])))


def test_project_single_vertex_by_hand():
    g = SphericalPolygon([[1.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]])
    out = shear_project(g, [S3, S3, S3])
    np.testing.assert_allclose(out[0], [-1.0, -1.0], atol=1e-15)


@pytest.mark.parametrize("fx", [ANTIPODAL_VERTEX, POINT_ON_SIDE, DOUBLE_DIAMOND], ids=lambda f: f.name)
def test_reference_cases(fx):
    assert shearing.classify(fx.polygon, fx.point_angles) == fx.expected


def test_denominator_bound():
    rng = np.random.default_rng(21)
    q = random_unit_vectors(rng, 200_000)
    assert np.abs(q).max(axis=1).min() >= S3 - 1e-15
    for v in q[:2000]:
        assert abs(plan_shear(v).dominant) >= S3 - 1e-15


def test_longitude_to_line():
    """Sides through +-q project to segments through the origin, others do not."""
    rng = np.random.default_rng(22)
    for q in random_unit_vectors(rng, 300):
        plan = plan_shear(q)
        u = np.cross(q, rng.normal(size=3))
        u /= np.linalg.norm(u)
        a1, a2 = rng.uniform(0.01, 1.5, 2)
        sign = rng.choice([-1.0, 1.0])
        p = sign * q
        a = math.cos(a1) * p - math.sin(a1) * u
        b = math.cos(a2) * p + math.sin(a2) * u
        pa, pb = shearing.shear(np.array([a, b]), plan)[:, list(plan.columns)]
        assert origin_on_segment(*pa, *pb, tol=1e-12)

        c = rng.normal(size=3)
        c /= np.linalg.norm(c)
        d = rng.normal(size=3)
        d /= np.linalg.norm(d)
        if min(arc_distance(q, c, d), arc_distance(-q, c, d)) < 1e-3:
            continue
        pc, pd = shearing.shear(np.array([c, d]), plan)[:, list(plan.columns)]
        assert not origin_on_segment(*pc, *pd, tol=1e-12)


def test_homotopy_preservation():
    """The projected arc and its chord together do not wind around the origin."""
    rng = np.random.default_rng(23)
    checked = 0
    for q in random_unit_vectors(rng, 400):
        plan = plan_shear(q)
        a, b = random_unit_vectors(rng, 2)
        if a @ b < -0.99 or min(arc_distance(q, a, b), arc_distance(-q, a, b)) < 1e-3:
            continue
        om = math.acos(a @ b)
        t = np.linspace(0, 1, 400)[:, None]
        arc = (np.sin((1 - t) * om) * a + np.sin(t * om) * b) / math.sin(om)
        curve = shearing.shear(arc, plan)[:, list(plan.columns)]
        # closing the curve with the chord gives a loop; its turning is ~0
        turning = float(np.sum(signed_angles(curve)))
        assert abs(turning) < math.pi
        assert abs(turning) < 1e-9
        checked += 1
    assert checked > 300


def test_antipode_duality():
    rng = np.random.default_rng(24)
    for inst in random_instances(24, 200, queries=0):
        v = inst.polygon.vertices
        i = int(rng.integers(len(v)))
        q = v[i] + v[(i + 1) % len(v)]
        q /= np.linalg.norm(q)
        assert shearing.classify(inst.polygon, q) == SphericalClassification.boundary(i + 1)
        assert shearing.classify(inst.polygon, -q) == SphericalClassification.antipode_on_boundary(i + 1)


def test_unsheared_midpoint_decides_side():
    """A side through Q whose sheared midpoint points away from Q is still a boundary hit."""
    q = np.array([0.6, 0.565685424949238, 0.565685424949238])
    q /= np.linalg.norm(q)
    rng = np.random.default_rng(25)
    found = 0
    for _ in range(2000):
        u = np.cross(q, rng.normal(size=3))
        u /= np.linalg.norm(u)
        a1, a2 = rng.uniform(0.05, math.pi, 2)
        if a1 + a2 >= math.pi - 0.05:
            continue
        a = math.cos(a1) * q - math.sin(a1) * u
        b = math.cos(a2) * q + math.sin(a2) * u
        plan = plan_shear(q)
        sheared = shearing.shear(np.array([a, b]), plan)
        if q @ sheared.sum(axis=0) >= 0:
            continue
        found += 1
        g = SphericalPolygon([a, b, (a + b) / np.linalg.norm(a + b) * 0.0 + _off(a, b)])
        assert shearing.classify(g, q) == rotation.classify(g, q)
        assert shearing.classify(g, q).edge_index == 1
    assert found > 0


def _off(a, b):
    """A third vertex off the great circle through a and b."""
    m = a + b
    n = np.cross(a, b)
    p = m / np.linalg.norm(m) + 0.3 * n / np.linalg.norm(n)
    return p / np.linalg.norm(p)


def test_agrees_with_rotation():
    for inst in random_instances(26, 300):
        for q in inst.queries:
            assert shearing.classify(inst.polygon, q) == rotation.classify(inst.polygon, q)
