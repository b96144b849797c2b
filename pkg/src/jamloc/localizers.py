"""Jammer localizers: centroid (CL), minimum covering circle (CJ) and GJL.

All three consume the boundary observations only. CL and CJ look at node
positions; GJL additionally uses the power difference between the two ends
of each of its chords to slide the perpendicular line toward the jammer.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    GJL_FALLBACK_ERRORS,
    DegenerateSegment,
    InsufficientBoundaryNodes,
    NoBoundaryNodes,
    NoTransverseChord,
)
from .geometry import (
    Line,
    Point2D,
    Segment,
    convex_hull,
    distance,
    line_intersection,
    min_enclosing_circle,
    perpendicular_at,
)
from .network import BoundaryObservation

DEFAULT_MIN_ANGLE_DEG = 15.0

# Power differences are resolved on this grid (dB) before use. Far finer than
# any RSS reading, and it makes GJL insensitive to a common power offset
# instead of to within a few ulps.
POWER_RESOLUTION_DB = 1e-7


class Method(str, enum.Enum):
    CL = "CL"
    CJ = "CJ"
    GJL = "GJL"


class CompensationMode(str, enum.Enum):
    """How the chord offset is computed from the power ratio ``k``.

    PAPER_EQ8:    dl = k*d12 / (2 + k)
    GEOMETRIC_D0: dl = (k - 1)*d12 / (k + 1), exact when the chord passes
                  through the jammer
    """

    PAPER_EQ8 = "paper"
    GEOMETRIC_D0 = "geometric"


@dataclass(frozen=True)
class ChordCompensation:
    node_1: BoundaryObservation  # lower received power (farther from the jammer)
    node_2: BoundaryObservation  # higher or equal received power
    d_12: float
    k: float
    delta_l: float
    t: float  # foot position, measured from node_2 toward node_1
    line: Line


@dataclass(frozen=True)
class GJLDiagnostics:
    mode: CompensationMode
    chords: tuple[ChordCompensation, ChordCompensation]


@dataclass(frozen=True)
class LocalizationEstimate:
    x: float
    y: float
    method: Method
    diagnostics: GJLDiagnostics | None = None
    fallback: bool = False

    @property
    def position(self) -> Point2D:
        return Point2D(self.x, self.y)


@dataclass(frozen=True)
class Chord:
    first: BoundaryObservation
    second: BoundaryObservation
    segment: Segment = field(repr=False)

    @property
    def length(self) -> float:
        return self.segment.length


def _require(observations: Sequence[BoundaryObservation]) -> None:
    if not observations:
        raise NoBoundaryNodes("no boundary observations to localize from")


def centroid_localize(observations: Sequence[BoundaryObservation]) -> LocalizationEstimate:
    _require(observations)
    n = len(observations)
    x = math.fsum(o.position.x for o in observations) / n
    y = math.fsum(o.position.y for o in observations) / n
    return LocalizationEstimate(x, y, Method.CL)


def cj_localize(
    observations: Sequence[BoundaryObservation], use_hull: bool = False
) -> LocalizationEstimate:
    """Center of the minimum enclosing circle of the boundary nodes.

    ``use_hull`` first reduces the nodes to their convex hull, which leaves
    the circle unchanged but shrinks the input.
    """
    _require(observations)
    pts = [o.position for o in observations]
    if use_hull:
        pts = convex_hull(pts)
    c = min_enclosing_circle(pts)
    return LocalizationEstimate(c.center.x, c.center.y, Method.CJ)


def _angle_deg(u: Segment, v: Segment) -> float:
    """Acute angle between the directions of two segments, in [0, 90]."""
    ux, uy = u.b.x - u.a.x, u.b.y - u.a.y
    vx, vy = v.b.x - v.a.x, v.b.y - v.a.y
    return math.degrees(math.atan2(abs(ux * vy - uy * vx), abs(ux * vx + uy * vy)))


def select_chords(
    observations: Sequence[BoundaryObservation], min_angle_deg: float = DEFAULT_MIN_ANGLE_DEG
) -> tuple[Chord, Chord]:
    """Pick the longest chord and the longest one crossing it at ``min_angle_deg`` or more.

    Ties on length go to the lexicographically smaller ``(node_id, node_id)``
    pair. The two chords may share one endpoint.
    """
    obs = sorted(observations, key=lambda o: o.node_id)
    if len({o.position for o in obs}) < 3:
        raise InsufficientBoundaryNodes(
            f"need at least 3 distinct boundary positions, got {len({o.position for o in obs})}"
        )
    pairs = []
    for a, b in itertools.combinations(obs, 2):
        if a.position == b.position:
            continue
        seg = Segment(a.position, b.position)
        pairs.append((-seg.length, a.node_id, b.node_id, Chord(a, b, seg)))
    pairs.sort(key=lambda p: p[:3])

    first = pairs[0][3]
    for *_, chord in pairs[1:]:
        if _angle_deg(first.segment, chord.segment) >= min_angle_deg:
            return first, chord
    raise NoTransverseChord(
        f"no boundary chord crosses the longest one at >= {min_angle_deg} degrees"
    )


def power_ratio(p_1: float, p_2: float) -> float:
    """``k = 10**((P2 - P1)/20)``; the factor 20 fixes the path loss exponent at 2."""
    return 10.0 ** ((p_2 - p_1) / 20.0)


def delta_from_ratio(k: float, d_12: float, mode: CompensationMode) -> float:
    if not d_12 > 0:
        raise DegenerateSegment(f"chord length must be positive, got {d_12}")
    if math.isinf(k):
        return d_12
    mode = CompensationMode(mode)
    if mode is CompensationMode.PAPER_EQ8:
        return k * d_12 / (2.0 + k)
    return (k - 1.0) * d_12 / (k + 1.0)


def compensation_delta(p_1: float, p_2: float, d_12: float, mode: CompensationMode) -> float:
    """Length ``l1 - l2`` by which the chord's perpendicular is offset from the midpoint.

    ``p_2`` is the higher of the two powers (the endpoint nearer the jammer).
    """
    if p_2 < p_1:
        raise ValueError(f"powers must be ordered so that p_2 >= p_1 (got {p_1}, {p_2})")
    return delta_from_ratio(power_ratio(p_1, p_2), d_12, mode)


def _quantized_gap(p_low: float, p_high: float) -> int:
    return round((p_high - p_low) / POWER_RESOLUTION_DB)


def compensate_chord(chord: Chord, mode: CompensationMode) -> ChordCompensation:
    a, b = chord.first, chord.second
    steps = _quantized_gap(a.received_power, b.received_power)
    # node_2 is the stronger endpoint; on a tie the lower node id stays node_1.
    node_1, node_2 = (a, b) if steps >= 0 else (b, a)
    gap_db = abs(steps) * POWER_RESOLUTION_DB
    k = 10.0 ** (gap_db / 20.0)
    d_12 = chord.length
    delta_l = delta_from_ratio(k, d_12, mode)
    t = (d_12 - delta_l) / (2.0 * d_12)
    line = perpendicular_at(Segment(node_2.position, node_1.position), t)
    return ChordCompensation(node_1, node_2, d_12, k, delta_l, t, line)


def gjl_localize(
    observations: Sequence[BoundaryObservation],
    mode: CompensationMode = CompensationMode.PAPER_EQ8,
    min_angle_deg: float = DEFAULT_MIN_ANGLE_DEG,
) -> LocalizationEstimate:
    """Intersect the power-compensated perpendiculars of the two selected chords.

    Raises one of ``GJL_FALLBACK_ERRORS`` when the construction is not possible.
    """
    mode = CompensationMode(mode)
    c1, c2 = select_chords(observations, min_angle_deg)
    comp1, comp2 = compensate_chord(c1, mode), compensate_chord(c2, mode)
    p = line_intersection(comp1.line, comp2.line)
    return LocalizationEstimate(p.x, p.y, Method.GJL, GJLDiagnostics(mode, (comp1, comp2)))


def localize(
    observations: Sequence[BoundaryObservation],
    method: Method,
    mode: CompensationMode = CompensationMode.PAPER_EQ8,
    min_angle_deg: float = DEFAULT_MIN_ANGLE_DEG,
) -> LocalizationEstimate:
    """Run ``method``; GJL falls back to CJ (``fallback=True``) on its typed failures.

    Total for any non-empty observation list.
    """
    method = Method(method)
    if method is Method.CL:
        return centroid_localize(observations)
    if method is Method.CJ:
        return cj_localize(observations)
    _require(observations)
    try:
        return gjl_localize(observations, mode, min_angle_deg)
    except GJL_FALLBACK_ERRORS:
        est = cj_localize(observations)
        return LocalizationEstimate(est.x, est.y, Method.GJL, None, fallback=True)


def localization_error(estimate: LocalizationEstimate, truth: Point2D) -> float:
    return distance(estimate.position, truth)
