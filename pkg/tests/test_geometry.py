from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stsep.errors import InvalidInstance, PointNotOnObstacle, PointOnObstacle
from stsep.geometry import (Arc, Circle, Disk, Instance, Obstacle, P, Polyline,
                            Segment, _arc_parity, _chain_parity, canonical_point,
                            coord, crossing_parity, loop_parity, obstacles_intersect,
                            on_shape, pair_parity_set, parity_to_point,
                            self_separates, validate_instance)
from stsep.qnum import QNum

PI = (P(-1, 0), P(1, 0))
PI2 = (P(-2, 0), P(2, 0))

small = st.integers(-6, 6)
points = st.tuples(small, small).map(lambda q: P(*q))


def seg(a, b):
    return Segment(P(*a), P(*b))


# ------------------------------------------------------------ crossing parity

def test_crossing_parity_single_crossing():
    assert crossing_parity((P(0, -1), P(0, 1)), PI) == 1


def test_crossing_parity_disjoint():
    assert crossing_parity((P(0, 1), P(1, 1)), PI) == 0


def test_crossing_parity_u_shape_crosses_twice():
    pts = (P(F(-1, 2), -1), P(F(-1, 2), 1), P(F(1, 2), 1), P(F(1, 2), -1))
    assert crossing_parity(pts, PI) == 0


def test_crossing_parity_touch_at_pi_vertex_is_consistent():
    # a chain ending exactly on pi, continued on the same side, crosses 0 times
    pi = (P(0, 0), P(4, 0))
    assert crossing_parity((P(1, 1), P(1, 0)), pi) ^ crossing_parity((P(1, 0), P(2, 1)), pi) == 0
    assert crossing_parity((P(1, 1), P(1, 0)), pi) ^ crossing_parity((P(1, 0), P(2, -1)), pi) == 1


def test_crossing_parity_along_pi_overlap():
    pi = (P(0, 0), P(4, 0))
    # runs on pi and leaves to the other side: one net crossing
    assert crossing_parity((P(1, 1), P(1, 0), P(3, 0), P(3, -1)), pi) == 1
    assert crossing_parity((P(1, 1), P(1, 0), P(3, 0), P(3, 1)), pi) == 0


@settings(max_examples=200, deadline=None)
@given(st.lists(points, min_size=3, max_size=7), st.integers(1, 5))
def test_crossing_parity_additive(pts, cut):
    cut = min(cut, len(pts) - 2)
    pi = (P(F(1, 2), F(1, 3)), P(5, F(1, 3)))
    whole = crossing_parity(pts, pi)
    left = crossing_parity(pts[:cut + 1], pi)
    right = crossing_parity(pts[cut:], pi)
    assert whole == left ^ right


@settings(max_examples=200, deadline=None)
@given(points, points)
def test_crossing_parity_matches_side_change(a, b):
    # for a single segment, parity is 1 iff the endpoints lie on opposite sides
    # of the shifted pi; with pi far longer than the box this is the line test
    pi = (P(-100, F(1, 3)), P(100, F(1, 3)))
    expect = int((a.y > F(1, 3)) != (b.y > F(1, 3)))
    assert crossing_parity((a, b), pi) == expect


# ------------------------------------------------------------- canonical point

def test_canonical_point_segment():
    assert canonical_point(seg((0, 0), (2, 3))) == P(2, 3)


def test_canonical_point_circle():
    assert canonical_point(Circle(P(1, 1), 2)) == P(1, 3)


def test_canonical_point_tie_breaks_by_x():
    assert canonical_point(seg((0, 5), (4, 5))) == P(4, 5)


# ---------------------------------------------------------------- separation

def test_circle_around_s_separates():
    assert self_separates(Circle(P(0, 0), 1), P(0, 0), P(3, 0))


def test_segment_never_separates():
    assert not self_separates(seg((0, -1), (0, 1)), P(-1, 0), P(1, 0))


def test_far_circle_does_not_separate():
    assert not self_separates(Circle(P(5, 5), 1), P(0, 0), P(3, 0))


def test_circle_around_both_does_not_separate():
    assert not self_separates(Circle(P(0, 0), 10), P(0, 0), P(3, 0))


def test_disk_holding_s_separates():
    assert self_separates(Disk(P(0, 0), 1), P(0, 0), P(3, 0))
    assert self_separates(Disk(P(0, 0), 10), P(0, 0), P(3, 0))


def test_point_on_obstacle_raises():
    with pytest.raises(PointOnObstacle):
        self_separates(Circle(P(0, 0), 1), P(1, 0), P(3, 0))


@settings(max_examples=150, deadline=None)
@given(points, st.integers(1, 5), points)
def test_self_separates_equals_loop_parity_for_circles(c, r, s):
    t = P(F(13, 2), F(1, 3))
    circ = Circle(c, r)
    if not on_shape(s, circ) and s != t:
        assert self_separates(circ, s, t) == bool(loop_parity(circ, (s, t)))


# ------------------------------------------------------------- intersections

def test_crossing_segments_meet_at_origin():
    reps = obstacles_intersect(seg((0, -1), (0, 1)), seg((-1, 0), (1, 0)))
    assert [r.point for r in reps] == [P(0, 0)]


def test_nested_disks_give_interior_witness():
    reps = obstacles_intersect(Disk(P(0, 0), 2), Disk(P(0, 0), 1))
    assert len(reps) == 1
    assert reps[0].point == P(0, 0)


def test_far_circles_do_not_meet():
    assert obstacles_intersect(Circle(P(0, 0), 1), Circle(P(3, 0), 1)) == []


def test_nested_circles_do_not_meet():
    assert obstacles_intersect(Circle(P(0, 0), 2), Circle(P(0, 0), 1)) == []


def test_collinear_overlap_is_represented():
    reps = obstacles_intersect(seg((0, 0), (4, 0)), seg((2, 0), (6, 0)))
    assert reps
    assert all(r.tag == "overlap" for r in reps)
    assert {r.point for r in reps} <= {P(2, 0), P(4, 0)}


def test_circle_circle_points_are_exact():
    reps = obstacles_intersect(Circle(P(0, 0), 1), Circle(P(1, 0), 1))
    ys = sorted(r.point[1] for r in reps)
    assert len(ys) == 2
    # y = +-sqrt(3)/2
    assert ys[1] * ys[1] == F(3, 4)
    assert isinstance(ys[1], QNum)


@settings(max_examples=200, deadline=None)
@given(points, points, points, points)
def test_intersection_reps_lie_on_both(a, b, c, d):
    if a == b or c == d:
        return
    g1, g2 = Segment(a, b), Segment(c, d)
    for rep in obstacles_intersect(g1, g2):
        assert on_shape(rep.point, g1) and on_shape(rep.point, g2)


# ---------------------------------------------------------- parity to point

def test_parity_to_point_segment():
    assert parity_to_point(seg((0, 2), (0, -2)), P(0, -2), PI2) == {1}


def test_parity_to_point_circle_at_canonical():
    assert parity_to_point(Circle(P(0, 0), 1), P(0, 1), PI2) == {0}


def test_parity_to_point_circle_bottom():
    assert parity_to_point(Circle(P(0, 0), 1), P(0, -1), PI2) == {1}


def test_parity_to_point_off_obstacle_raises():
    with pytest.raises(PointNotOnObstacle):
        parity_to_point(seg((0, 0), (1, 0)), P(5, 5), PI2)


@settings(max_examples=150, deadline=None)
@given(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(1, 4),
       st.fractions(-1, 1, max_denominator=5))
def test_disk_chord_parity_matches_boundary_path(c, r, u):
    # a point on the boundary: chord parity inside the disk equals the
    # parity along the arc, because s and t are off the disk
    s, t = P(F(1, 2), F(1, 3)), P(9, F(1, 3))
    disk = Disk(P(*c), r)
    if on_shape(s, disk) or on_shape(t, disk):
        return
    den = 1 + u * u
    p = P(c[0] + r * (1 - u * u) / den, c[1] + r * 2 * u / den)
    top = canonical_point(disk)
    chord = _chain_parity((top, p), (s, t))
    arc = _arc_parity(Arc(disk.center, disk.radius, top, p), (s, t))
    assert parity_to_point(disk, p, (s, t)) == {chord}
    if not self_separates(disk, s, t):
        assert chord == arc


# ------------------------------------------------------------ pair parities

A = Obstacle(0, 1, seg((0, 2), (0, -2)))
B = Obstacle(1, 1, seg((-1, -1), (1, -3)))


def test_pair_parity_touching_segments():
    assert pair_parity_set(A, B, PI2) == {1}


def test_pair_parity_disjoint_is_empty():
    far = Obstacle(2, 1, seg((10, 10), (11, 10)))
    assert pair_parity_set(A, far, PI2) == frozenset()


def test_pair_parity_mirror_circles():
    c1 = Obstacle(0, 1, Circle(P(0, 0), 1))
    c2 = Obstacle(1, 1, Circle(P(F(6, 10), 0), 1))
    assert pair_parity_set(c1, c2, PI2) == {0}


@settings(max_examples=200, deadline=None)
@given(points, points, points, points)
def test_pair_parity_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    g1, g2 = Obstacle(0, 1, Segment(a, b)), Obstacle(1, 1, Segment(c, d))
    pi = (P(F(1, 2), F(1, 3)), P(9, F(1, 3)))
    assert pair_parity_set(g1, g2, pi) == pair_parity_set(g2, g1, pi)


def _inside_loop(q, loop):
    inside = False
    for i in range(len(loop)):
        a, b = loop[i], loop[(i + 1) % len(loop)]
        if (a.y > q.y) != (b.y > q.y):
            if q.x < a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y):
                inside = not inside
    return inside


@settings(max_examples=200, deadline=None)
@given(points, points, points, points)
def test_pair_parity_under_detour_flips_by_enclosure(a, b, c, d):
    # moving pi to a detour flips the pair parity exactly when one canonical
    # point, but not the other, lies in the loop formed by the two paths
    if a == b or c == d:
        return
    s, t = P(F(1, 2), F(1, 3)), P(9, F(1, 3))
    detour = (s, P(F(1, 2), F(25, 3)), P(9, F(25, 3)), t)
    g1, g2 = Obstacle(0, 1, Segment(a, b)), Obstacle(1, 1, Segment(c, d))
    loop = list(detour)
    flip = _inside_loop(canonical_point(g1), loop) ^ _inside_loop(canonical_point(g2), loop)
    before = pair_parity_set(g1, g2, (s, t))
    after = pair_parity_set(g1, g2, detour)
    assert after == {x ^ flip for x in before}


# ---------------------------------------------------------------- validation

def test_coord_parses_exactly():
    assert coord("1/3") == F(1, 3)
    assert coord("0.1") == F(1, 10)
    assert coord(7) == 7
    with pytest.raises(TypeError):
        coord(True)


def test_validate_rejects_point_on_segment():
    inst = Instance((Obstacle(0, 1, seg((0, -1), (0, 1))),), P(0, 0), P(3, 0))
    with pytest.raises(InvalidInstance):
        validate_instance(inst)


def test_validate_rejects_duplicate_ids():
    ob = Obstacle(0, 1, seg((5, 5), (6, 6)))
    with pytest.raises(InvalidInstance):
        validate_instance(Instance((ob, ob), P(0, 0), P(3, 0)))


def test_validate_rejects_self_crossing_polyline():
    bow = Polyline((P(0, 5), P(2, 7), P(2, 5), P(0, 7)))
    with pytest.raises(InvalidInstance):
        validate_instance(Instance((Obstacle(0, 1, bow),), P(0, 0), P(3, 0)))


def test_validate_rejects_coincident_terminals():
    with pytest.raises(InvalidInstance):
        validate_instance(Instance((), P(0, 0), P(0, 0)))
