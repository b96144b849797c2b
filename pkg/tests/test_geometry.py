import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jamloc.errors import DegenerateSegment, EmptyPointSet, NearParallelLines
from jamloc.geometry import (
    Circle,
    Line,
    Point2D,
    Segment,
    convex_hull,
    distance,
    line_intersection,
    min_enclosing_circle,
    perpendicular_at,
    perpendicular_bisector,
)
from oracles import brute_force_mec, outside_hull

coord = st.floats(min_value=0.0, max_value=100.0, allow_nan=False)
point = st.builds(Point2D, coord, coord)


def P(x, y):
    return Point2D(float(x), float(y))


def _rigid(theta, tx, ty):
    c, s = math.cos(theta), math.sin(theta)
    return lambda p: Point2D(c * p.x - s * p.y + tx, s * p.x + c * p.y + ty)


# --- distance ---------------------------------------------------------------


@pytest.mark.parametrize(
    "p, q, d",
    [((0, 0), (0, 0), 0.0), ((0, 0), (3, 4), 5.0), ((1, 1), (4, 5), 5.0)],
)
def test_distance_examples(p, q, d):
    assert distance(P(*p), P(*q)) == d


@given(point, point)
def test_distance_symmetric_nonnegative(p, q):
    assert distance(p, q) == distance(q, p) >= 0.0


def test_point_rejects_nonfinite():
    with pytest.raises(ValueError):
        Point2D(math.nan, 0.0)


# --- convex hull ------------------------------------------------------------


def test_hull_drops_interior_point():
    pts = [P(0, 0), P(1, 0), P(0, 1), P(1, 1), P(0.5, 0.5)]
    assert convex_hull(pts) == [P(0, 0), P(1, 0), P(1, 1), P(0, 1)]


def test_hull_singleton_and_empty():
    assert convex_hull([P(0, 0)]) == [P(0, 0)]
    with pytest.raises(EmptyPointSet):
        convex_hull([])


def test_hull_collinear_and_duplicates():
    pts = [P(0, 0), P(1, 1), P(2, 2), P(2, 2), P(3, 3)]
    assert convex_hull(pts) == [P(0, 0), P(3, 3)]


def test_hull_random_halfplane_oracle():
    rng = np.random.default_rng(5)
    pts = [P(x, y) for x, y in rng.uniform(0, 100, size=(100, 2))]
    hull = convex_hull(pts)
    assert outside_hull([tuple(p) for p in pts], [tuple(h) for h in hull]) == []
    assert set(hull) <= set(pts)


@given(st.lists(point, min_size=3, max_size=40))
def test_hull_is_convex_ccw(pts):
    hull = convex_hull(pts)
    m = len(hull)
    if m < 3:
        return
    for i in range(m):
        a, b, c = hull[i], hull[(i + 1) % m], hull[(i + 2) % m]
        assert (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) >= 0.0
    assert outside_hull([tuple(p) for p in pts], [tuple(h) for h in hull]) == []


# --- minimum enclosing circle ----------------------------------------------


def test_mec_two_points():
    c = min_enclosing_circle([P(0, 0), P(2, 0)])
    assert c.center == P(1, 0) and c.radius == 1.0


def test_mec_third_point_on_diameter_circle():
    c = min_enclosing_circle([P(0, 0), P(2, 0), P(1, 1)])
    assert c.center == P(1, 0) and c.radius == pytest.approx(1.0, abs=1e-12)


def test_mec_single_and_empty():
    assert min_enclosing_circle([P(3, 4)]) == Circle(P(3, 4), 0.0)
    assert min_enclosing_circle([P(3, 4), P(3, 4)]) == Circle(P(3, 4), 0.0)
    with pytest.raises(EmptyPointSet):
        min_enclosing_circle([])


def test_mec_collinear_gives_extreme_diameter():
    c = min_enclosing_circle([P(i, 2 * i) for i in range(7)])
    assert c.center.x == pytest.approx(3.0) and c.center.y == pytest.approx(6.0)
    assert c.radius == pytest.approx(math.hypot(6, 12) / 2)


def test_mec_matches_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        pts = [P(rng.uniform(0, 100), rng.uniform(0, 100)) for _ in range(rng.randint(1, 12))]
        c = min_enclosing_circle(pts)
        center, r = brute_force_mec([tuple(p) for p in pts])
        assert abs(c.radius - r) < 1e-9
        assert distance(c.center, P(*center)) < 1e-9


@given(st.lists(point, min_size=1, max_size=30), st.randoms(use_true_random=False))
def test_mec_contains_all_and_is_permutation_invariant(pts, rnd):
    c = min_enclosing_circle(pts)
    assert all(distance(c.center, p) <= c.radius + 1e-9 for p in pts)
    shuffled = list(pts)
    rnd.shuffle(shuffled)
    assert min_enclosing_circle(shuffled) == c


@settings(max_examples=50)
@given(
    st.lists(point, min_size=1, max_size=20),
    st.floats(0, 2 * math.pi),
    st.floats(-500, 500),
    st.floats(-500, 500),
)
def test_hull_and_mec_rigid_equivariance(pts, theta, tx, ty):
    move = _rigid(theta, tx, ty)
    c0 = min_enclosing_circle(pts)
    c1 = min_enclosing_circle([move(p) for p in pts])
    assert distance(move(c0.center), c1.center) < 1e-6
    assert abs(c0.radius - c1.radius) < 1e-6

    h0 = convex_hull(pts)
    h1 = convex_hull([move(p) for p in pts])
    if len(h0) >= 3 and len(h1) == len(h0):
        # Same vertex cycle up to rotation of the starting index.
        moved = [move(p) for p in h0]
        start = min(range(len(moved)), key=lambda i: distance(moved[i], h1[0]))
        moved = moved[start:] + moved[:start]
        assert max(distance(a, b) for a, b in zip(moved, h1)) < 1e-6


# --- lines ------------------------------------------------------------------


def test_bisector_axis_aligned():
    l1 = perpendicular_bisector(Segment(P(0, 0), P(2, 0)))
    assert (l1.alpha, l1.beta, l1.gamma) == (1.0, 0.0, -1.0)
    l2 = perpendicular_bisector(Segment(P(0, 0), P(0, 2)))
    assert (l2.alpha, l2.beta, l2.gamma) == (0.0, 1.0, -1.0)


def test_degenerate_segment():
    with pytest.raises(DegenerateSegment):
        Segment(P(1, 1), P(1, 1))


@given(point, point, st.floats(-200, 200))
def test_bisector_equidistance(a, b, u):
    if distance(a, b) < 1e-3:
        return
    line = perpendicular_bisector(Segment(a, b))
    dx, dy = line.direction
    mid = Point2D((a.x + b.x) / 2, (a.y + b.y) / 2)
    q = Point2D(mid.x + u * dx, mid.y + u * dy)
    assert abs(line.signed_distance(q)) < 1e-9
    assert abs(distance(q, a) - distance(q, b)) < 1e-9


def test_perpendicular_at_examples():
    s = Segment(P(0, 0), P(4, 0))
    assert perpendicular_at(s, 0.5) == perpendicular_bisector(s)
    l = perpendicular_at(s, 0.25)
    assert (l.alpha, l.beta, l.gamma) == (1.0, 0.0, -1.0)


@given(point, point, st.floats(0.0, 1.1))
def test_perpendicular_at_orthogonal(a, b, t):
    if a == b:
        return
    s = Segment(a, b)
    l = perpendicular_at(s, t)
    dx, dy = l.direction
    ux, uy = (b.x - a.x) / s.length, (b.y - a.y) / s.length
    assert abs(dx * ux + dy * uy) < 1e-12
    assert abs(l.signed_distance(s.point_at(t))) < 1e-9


def test_line_intersection_examples():
    assert line_intersection(Line(1, 0, -1), Line(0, 1, -2)) == P(1, 2)
    with pytest.raises(NearParallelLines):
        line_intersection(Line(1, 0, 0), Line(1, 0, -1))


def test_line_is_normalized():
    l = Line(3.0, 4.0, -10.0)
    assert math.hypot(l.alpha, l.beta) == pytest.approx(1.0, abs=1e-15)
    assert l.gamma == pytest.approx(-2.0)


@given(point, point, st.floats(0, math.pi), st.floats(0, math.pi))
def test_line_intersection_substitution(p, q, th1, th2):
    if abs(math.sin(th1 - th2)) < 1e-3:
        return
    l1 = Line.through(p, (math.cos(th1), math.sin(th1)))
    l2 = Line.through(q, (math.cos(th2), math.sin(th2)))
    x = line_intersection(l1, l2)
    assert abs(l1.signed_distance(x)) < 1e-9
    assert abs(l2.signed_distance(x)) < 1e-9
