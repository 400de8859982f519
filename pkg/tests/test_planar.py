import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spip.planar import PlanarState, angle_sum_wn, classify_origin, origin_on_segment
from spip.sphere import Location, ValidationError

from instances import clear_loops

SQUARE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]


def test_ccw_square_interior():
    assert classify_origin(SQUARE) == PlanarState(Location.INTERIOR, 1)


def test_cw_square_exterior_negative():
    assert classify_origin(SQUARE[::-1]) == PlanarState(Location.EXTERIOR, -1)


def test_origin_on_vertical_side():
    assert classify_origin([(2, 0), (0, 2), (0, -2)]) == PlanarState.on_boundary(2)


def test_origin_at_vertex_reports_first_side():
    assert classify_origin([(0, 0), (1, 0), (0, 1)]).edge_index == 1
    assert classify_origin([(1, 0), (0, 0), (0, 1)]).edge_index == 1


def test_side_on_axis_not_through_origin():
    # collinear with the origin but the origin is outside the segment
    assert classify_origin([(0, 1), (0, 2), (-1, 1.5)]).location is not Location.BOUNDARY
    assert classify_origin([(1, 0), (2, 0), (1.5, -1)]).location is not Location.BOUNDARY
    assert not origin_on_segment(0, 1, 0, 2)
    assert origin_on_segment(0, 1, 0, -2)


def test_exterior_zero():
    assert classify_origin([(1, 1), (2, 1), (2, 2)]) == PlanarState(Location.EXTERIOR, 0)


def test_zero_length_side_is_skipped():
    pts = [(1, 1), (-1, 1), (-1, 1), (-1, -1), (1, -1)]
    assert classify_origin(pts) == PlanarState(Location.INTERIOR, 1)


def test_double_loop():
    pts = [(math.cos(t), math.sin(t)) for t in np.linspace(0, 4 * math.pi, 9)[:-1]]
    assert classify_origin(pts) == PlanarState(Location.INTERIOR, 2)


@pytest.mark.parametrize("bad", [[(0, 1), (1, 0)], [(0, 1), (1, float("nan")), (1, 1)]])
def test_rejects_bad_polygons(bad):
    with pytest.raises(ValidationError):
        classify_origin(bad)


def test_agrees_with_angle_sum():
    for p in clear_loops(1, 1000):
        state = classify_origin(p)
        assert state.location is not Location.BOUNDARY
        assert state.wn == angle_sum_wn(p)


def test_reversal_negates_wn():
    for p in clear_loops(2, 300):
        assert classify_origin(p[::-1]).wn == -classify_origin(p).wn


@given(st.floats(1e-6, 1e6))
@settings(max_examples=50)
def test_scale_invariant(s):
    loops = clear_loops(3, 20)
    loops.append(np.array([(2.0, 0.0), (0.0, 2.0), (0.0, -2.0)]))
    for p in loops:
        assert classify_origin(p * s) == classify_origin(p)


def test_cyclic_shift():
    for p in clear_loops(4, 200):
        k = 1 + len(p) // 2
        assert classify_origin(np.roll(p, -k, axis=0)).wn == classify_origin(p).wn
    # boundary index follows the shift
    tri = np.array([(2.0, 0.0), (0.0, 2.0), (0.0, -2.0), (1.0, -3.0)])
    for k in range(4):
        shifted = np.roll(tri, -k, axis=0)
        assert classify_origin(shifted).edge_index == (2 - 1 - k) % 4 + 1


def test_angle_sum_examples():
    assert angle_sum_wn(SQUARE) == 1
    assert angle_sum_wn(SQUARE[::-1]) == -1


def test_angle_sum_rejects_origin_on_boundary():
    with pytest.raises(ValidationError):
        angle_sum_wn([(2, 0), (0, 2), (0, -2)])
    with pytest.raises(ValidationError):
        angle_sum_wn([(0, 0), (1, 0), (0, 1)])
