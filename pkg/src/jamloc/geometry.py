"""Planar geometry primitives used by the localizers.

Everything here is a pure function of its arguments. Lengths are in meters.
"""

from __future__ import annotations

import hashlib
import math
import random
import struct
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateSegment, EmptyPointSet, NearParallelLines

EPS = 1e-9
# Relative slack for the in-circle test inside the MEC construction.
_MEC_REL_EPS = 1e-14


@dataclass(frozen=True, slots=True)
class Point2D:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def __add__(self, other: Point2D) -> Point2D:
        return Point2D(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2D) -> Point2D:
        return Point2D(self.x - other.x, self.y - other.y)


@dataclass(frozen=True, slots=True)
class Segment:
    a: Point2D
    b: Point2D

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateSegment(f"zero-length segment at {self.a}")

    @property
    def length(self) -> float:
        return distance(self.a, self.b)

    def point_at(self, t: float) -> Point2D:
        return Point2D(self.a.x + t * (self.b.x - self.a.x), self.a.y + t * (self.b.y - self.a.y))


@dataclass(frozen=True, slots=True)
class Line:
    """Line ``alpha*x + beta*y + gamma = 0`` with a unit normal ``(alpha, beta)``."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        norm = math.hypot(self.alpha, self.beta)
        if norm == 0.0:
            raise ValueError("line normal must be non-zero")
        if abs(norm - 1.0) > 1e-12:
            object.__setattr__(self, "alpha", self.alpha / norm)
            object.__setattr__(self, "beta", self.beta / norm)
            object.__setattr__(self, "gamma", self.gamma / norm)

    @classmethod
    def through(cls, point: Point2D, normal: tuple[float, float]) -> Line:
        nx, ny = normal
        norm = math.hypot(nx, ny)
        nx, ny = nx / norm, ny / norm
        return cls(nx, ny, -(nx * point.x + ny * point.y))

    @property
    def direction(self) -> tuple[float, float]:
        return (-self.beta, self.alpha)

    def signed_distance(self, p: Point2D) -> float:
        return self.alpha * p.x + self.beta * p.y + self.gamma

    def foot(self) -> Point2D:
        """Point of the line closest to the origin."""
        return Point2D(-self.gamma * self.alpha, -self.gamma * self.beta)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point2D
    radius: float

    def __post_init__(self):
        if not self.radius >= 0.0:
            raise ValueError(f"negative radius {self.radius}")

    def contains(self, p: Point2D, tol: float = EPS) -> bool:
        return distance(self.center, p) <= self.radius + tol


def as_point(p) -> Point2D:
    return p if isinstance(p, Point2D) else Point2D(*map(float, p))


def distance(p: Point2D, q: Point2D) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def cross(o: Point2D, a: Point2D, b: Point2D) -> float:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _unique_sorted(points: Iterable) -> list[Point2D]:
    pts = sorted({(float(x), float(y)) for x, y in points})
    return [Point2D(x, y) for x, y in pts]


def convex_hull(points: Iterable) -> list[Point2D]:
    """Monotone-chain convex hull.

    Returns the hull vertices counter-clockwise starting from the lowest-x
    (then lowest-y) point. Duplicates are dropped and collinear points on the
    hull boundary are not reported as vertices, so a collinear input yields
    its two extreme points.
    """
    pts = _unique_sorted(points)
    if not pts:
        raise EmptyPointSet("convex hull of an empty point set")
    if len(pts) <= 2:
        return pts

    lower: list[Point2D] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper: list[Point2D] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull


# --- minimum enclosing circle ---------------------------------------------


def _shuffle_seed(pts: Sequence[Point2D]) -> int:
    h = hashlib.blake2b(digest_size=8)
    for p in pts:
        h.update(struct.pack("<dd", p.x, p.y))
    return int.from_bytes(h.digest(), "little")


def _in_circle(c: Circle | None, p: Point2D) -> bool:
    return c is not None and distance(c.center, p) <= c.radius * (1.0 + _MEC_REL_EPS) + 1e-12


def _diameter_circle(a: Point2D, b: Point2D) -> Circle:
    center = Point2D((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    return Circle(center, max(distance(center, a), distance(center, b)))


def circumcircle(a: Point2D, b: Point2D, c: Point2D) -> Circle | None:
    """Circle through three points, or None when they are collinear."""
    # Work relative to the bounding-box center to keep the determinant well scaled.
    ox = (min(a.x, b.x, c.x) + max(a.x, b.x, c.x)) / 2.0
    oy = (min(a.y, b.y, c.y) + max(a.y, b.y, c.y)) / 2.0
    ax, ay = a.x - ox, a.y - oy
    bx, by = b.x - ox, b.y - oy
    cx, cy = c.x - ox, c.y - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    x = ox + (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    y = oy + (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    if not (math.isfinite(x) and math.isfinite(y)):
        return None
    center = Point2D(x, y)
    return Circle(center, max(distance(center, a), distance(center, b), distance(center, c)))


def _circle_two_fixed(pts: Sequence[Point2D], p: Point2D, q: Point2D) -> Circle:
    circ = _diameter_circle(p, q)
    left: Circle | None = None
    right: Circle | None = None
    for r in pts:
        if _in_circle(circ, r):
            continue
        side = cross(p, q, r)
        c = circumcircle(p, q, r)
        if c is None:
            continue
        if side > 0.0 and (left is None or cross(p, q, c.center) > cross(p, q, left.center)):
            left = c
        elif side < 0.0 and (right is None or cross(p, q, c.center) < cross(p, q, right.center)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left.radius <= right.radius else right


def _circle_one_fixed(pts: Sequence[Point2D], p: Point2D) -> Circle:
    c = Circle(p, 0.0)
    for i, q in enumerate(pts):
        if not _in_circle(c, q):
            if c.radius == 0.0:
                c = _diameter_circle(p, q)
            else:
                c = _circle_two_fixed(pts[: i + 1], p, q)
    return c


def min_enclosing_circle(points: Iterable) -> Circle:
    """Smallest circle containing every point (Welzl-style incremental construction).

    The input is deduplicated and sorted, then shuffled with a seed hashed
    from the sorted coordinates, so the result does not depend on input order
    and repeated calls are bit-identical.
    """
    pts = _unique_sorted(points)
    if not pts:
        raise EmptyPointSet("minimum enclosing circle of an empty point set")
    random.Random(_shuffle_seed(pts)).shuffle(pts)

    c: Circle | None = None
    for i, p in enumerate(pts):
        if not _in_circle(c, p):
            c = _circle_one_fixed(pts[: i + 1], p)
    return c


# --- lines ------------------------------------------------------------------


def perpendicular_at(s: Segment, t: float) -> Line:
    """Line orthogonal to ``s`` through ``s.a + t*(s.b - s.a)``."""
    if not math.isfinite(t):
        raise ValueError(f"non-finite segment parameter {t}")
    if s.a == s.b:
        raise DegenerateSegment(f"zero-length segment at {s.a}")
    return Line.through(s.point_at(t), (s.b.x - s.a.x, s.b.y - s.a.y))


def perpendicular_bisector(s: Segment) -> Line:
    return perpendicular_at(s, 0.5)


def line_intersection(l1: Line, l2: Line) -> Point2D:
    det = l1.alpha * l2.beta - l2.alpha * l1.beta
    # With unit normals, |det| is the sine of the angle between the lines.
    if abs(det) < EPS:
        raise NearParallelLines(f"lines are (nearly) parallel: |sin| = {abs(det):.3e}")
    x = (l1.beta * l2.gamma - l2.beta * l1.gamma) / det
    y = (l2.alpha * l1.gamma - l1.alpha * l2.gamma) / det
    return Point2D(x, y)
