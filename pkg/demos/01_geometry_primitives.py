"""Geometry building blocks: hull, minimum enclosing circle, bisectors.

Run with ``python demos/01_geometry_primitives.py``.
"""

import numpy as np

from jamloc.geometry import (
    Point2D,
    Segment,
    convex_hull,
    line_intersection,
    min_enclosing_circle,
    perpendicular_at,
    perpendicular_bisector,
)

rng = np.random.default_rng(0)
points = [Point2D(float(x), float(y)) for x, y in rng.uniform(0, 100, size=(25, 2))]

# Convex hull, counter-clockwise from the left-most point.
hull = convex_hull(points)
print(f"{len(points)} points, {len(hull)} on the hull")

# The enclosing circle only depends on hull vertices, and not on input order.
c_all = min_enclosing_circle(points)
c_hull = min_enclosing_circle(hull)
c_rev = min_enclosing_circle(points[::-1])
print(f"MEC center ({c_all.center.x:.3f}, {c_all.center.y:.3f}), radius {c_all.radius:.3f}")
print("same from hull only:", c_all == c_hull, "| same reversed:", c_all == c_rev)

# Any two chords of a circle have perpendicular bisectors meeting at its center.
center, r = Point2D(40.0, 55.0), 25.0
on = [Point2D(center.x + r * np.cos(a), center.y + r * np.sin(a)) for a in (0.3, 2.0, 3.5, 5.1)]
p = line_intersection(perpendicular_bisector(Segment(on[0], on[2])),
                      perpendicular_bisector(Segment(on[1], on[3])))
print(f"bisectors meet at ({p.x:.9f}, {p.y:.9f})")

# perpendicular_at slides the perpendicular along the segment: t = 0.25 is a quarter of the way.
line = perpendicular_at(Segment(Point2D(0, 0), Point2D(4, 0)), 0.25)
print(f"perpendicular at t=0.25: {line.alpha:+.1f}*x {line.beta:+.1f}*y {line.gamma:+.1f} = 0")
