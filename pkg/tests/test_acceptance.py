"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py``.
"""
import contextlib
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from spip import oracle, rotation, shearing
from spip.fixtures import ANTIPODAL_VERTEX, DOUBLE_DIAMOND, POINT_ON_SIDE
from spip.oracle import SubdivisionConfig
from spip.planar import angle_sum_wn, classify_origin
from spip.sphere import (
    Location,
    Side,
    SphericalAngles,
    SphericalClassification,
    chord_midpoint_side,
    from_angles,
    random_unit_vectors,
)

from conftest import ACCEPTANCE_LINES
from instances import clear_loops, random_instances, random_rotation

CROSS_SEED = 2024
N_POLYGONS = 1000
N_QUERIES = 10


@contextlib.contextmanager
def criterion(number, title):
    detail = []
    try:
        yield detail
    except BaseException:
        ACCEPTANCE_LINES.append((number, f"FAIL  {number:>2}. {title}  {' '.join(detail)}"))
        raise
    ACCEPTANCE_LINES.append((number, f"PASS  {number:>2}. {title}  {' '.join(detail)}"))


def best_time(fn, repeat=200):
    best = math.inf
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def both(g, q):
    return rotation.classify(g, q), shearing.classify(g, from_angles(q) if isinstance(q, SphericalAngles) else q)


def test_01_antipodal_vertex():
    with criterion(1, "antipode of Q on the boundary -> exterior, both methods, < 1 ms") as d:
        fx = ANTIPODAL_VERTEX
        g, q = fx.polygon, fx.point_angles
        for c in both(g, q):
            assert c.location is Location.EXTERIOR
            assert c.antipode_edge is not None and not c.wn_defined
        t_rot = best_time(lambda: rotation.classify(g, q))
        t_sh = best_time(lambda: shearing.classify(g, q))
        d.append(f"[rotation {t_rot * 1e3:.3f} ms, shearing {t_sh * 1e3:.3f} ms]")
        assert t_rot < 1e-3 and t_sh < 1e-3


def test_02_point_on_side():
    with criterion(2, "Q on side 3 of the isosceles triangle -> boundary(3), Q side") as d:
        fx = POINT_ON_SIDE
        for c in both(fx.polygon, fx.point_angles):
            assert c == SphericalClassification.boundary(3)
        v = fx.polygon.vertices
        assert chord_midpoint_side(v[2], v[0], from_angles(fx.point_angles)) is Side.Q


def test_03_double_diamond():
    with criterion(3, "non-simple 10-gon -> interior(2), both methods and oracle at 16/64/256") as d:
        fx = DOUBLE_DIAMOND
        expected = SphericalClassification(Location.INTERIOR, 2)
        for c in both(fx.polygon, fx.point_angles):
            assert c == expected
        for k in (16, 64, 256):
            assert oracle.classify_by_subdivision(fx.polygon, fx.point_angles, SubdivisionConfig(k)) == expected


@pytest.fixture(scope="module")
def cross_instances():
    t = time.perf_counter()
    insts = list(random_instances(CROSS_SEED, N_POLYGONS, N_QUERIES))
    return insts, time.perf_counter() - t


def test_04_cross_method_agreement(cross_instances):
    with criterion(4, "1000 HC polygons x 10 points: rotation = shearing = oracle, < 60 s") as d:
        insts, t_gen = cross_instances
        t = time.perf_counter()
        disagreements = 0
        tally = {loc: 0 for loc in Location}
        for inst in insts:
            assert 3 <= len(inst.polygon) <= 12 and 0.1 <= inst.radius <= 1.4
            for q in inst.queries:
                r = rotation.classify(inst.polygon, q)
                s = shearing.classify(inst.polygon, q)
                o = oracle.classify_by_subdivision(inst.polygon, q)
                disagreements += not (r == s == o)
                tally[r.location] += 1
        elapsed = time.perf_counter() - t
        d.append(f"[{disagreements} disagreements; interior {tally[Location.INTERIOR]}, "
                 f"exterior {tally[Location.EXTERIOR]}; classify {elapsed:.1f} s, "
                 f"generate {t_gen:.1f} s]")
        assert disagreements == 0
        assert tally[Location.INTERIOR] > 500  # not vacuous
        assert elapsed + t_gen < 60


def test_05_rotation_matrix_contract():
    with criterion(5, "1e5 rotations: orthogonal, det 1, R Q = N, all to 1e-12") as d:
        rng = np.random.default_rng(5)
        theta = rng.uniform(0, math.pi, 100_000)
        phi = rng.uniform(-math.pi, math.pi, 100_000)
        theta[:3] = [0.0, math.pi, math.pi / 2]
        mats = np.array([rotation.rotation_to_north(SphericalAngles(t, p)).matrix
                         for t, p in zip(theta, phi)])
        qs = np.stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], 1)
        orth = np.abs(np.einsum("kji,kjl->kil", mats, mats) - np.eye(3)).max()
        det = np.abs(np.linalg.det(mats) - 1).max()
        to_north = np.linalg.norm(np.einsum("kij,kj->ki", mats, qs) - [0, 0, 1], axis=1).max()
        d.append(f"[max |R'R-I| {orth:.1e}, |det-1| {det:.1e}, |RQ-N| {to_north:.1e}]")
        assert orth < 1e-12 and det < 1e-12 and to_north < 1e-12


def test_06_planar_wn_equivalence():
    with criterion(6, "1000 planar polygons: crossing-rule wn = angle-sum wn exactly") as d:
        loops = clear_loops(6, 1000)
        mismatches = sum(classify_origin(p).wn != angle_sum_wn(p) for p in loops)
        nonzero = sum(angle_sum_wn(p) != 0 for p in loops)
        d.append(f"[{mismatches} mismatches, {nonzero} with nonzero wn]")
        assert mismatches == 0


def test_07_antipode_duality(cross_instances):
    with criterion(7, "Q on a side midpoint -> boundary; -Q -> exterior, both methods") as d:
        insts, _ = cross_instances
        rng = np.random.default_rng(7)
        bad = 0
        for inst in insts:
            v = inst.polygon.vertices
            i = int(rng.integers(len(v)))
            q = v[i] + v[(i + 1) % len(v)]
            q /= np.linalg.norm(q)
            for c in both(inst.polygon, q):
                bad += c != SphericalClassification.boundary(i + 1)
            for c in both(inst.polygon, -q):
                bad += not (c.location is Location.EXTERIOR and c.antipode_edge == i + 1)
        d.append(f"[{bad} failures over {len(insts)} polygons]")
        assert bad == 0


def test_08_global_rotation_invariance(cross_instances):
    with criterion(8, "200 instances under random rotations: same tag, wn, edge index") as d:
        insts, _ = cross_instances
        rng = np.random.default_rng(8)
        bad = 0
        for inst in insts[:200]:
            s = random_rotation(rng)
            moved = inst.polygon.transformed(s)
            q = inst.queries[0]
            v = inst.polygon.vertices
            on = v[0] + v[1]
            on /= np.linalg.norm(on)
            for point in (q, on, -on):
                for method in (rotation.classify, shearing.classify):
                    bad += method(moved, s @ point) != method(inst.polygon, point)
        d.append(f"[{bad} mismatches]")
        assert bad == 0


def test_09_shear_denominator_bound():
    with criterion(9, "1e6 unit vectors: dominant |coordinate| >= 1/sqrt(3) - 1e-15") as d:
        rng = np.random.default_rng(9)
        qs = random_unit_vectors(rng, 1_000_000)
        worst = min(abs(shearing.plan_shear(q).dominant) for q in qs)
        d.append(f"[min {worst:.6f} vs {1 / math.sqrt(3):.6f}]")
        assert worst >= 1 / math.sqrt(3) - 1e-15


def test_10_fixtures_deterministic():
    with criterion(10, "`spip fixtures` output is byte-identical across runs") as d:
        cmd = [sys.executable, "-m", "spip.cli", "fixtures"]
        runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
        d.append(f"[{len(runs[0])} bytes]")
        assert runs[0] == runs[1] and b" NO" not in runs[0]
