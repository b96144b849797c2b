"""Sensor field generation and node classification around a jammer."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .geometry import Point2D, distance
from .propagation import MIN_DISTANCE, RadioParams, received_power


class NodeClass(enum.Enum):
    UNAFFECTED = "unaffected"
    BOUNDARY = "boundary"
    JAMMED = "jammed"


@dataclass(frozen=True)
class Node:
    id: int
    position: Point2D


@dataclass(frozen=True)
class Jammer:
    position: Point2D
    radius: float
    radio: RadioParams = field(default_factory=RadioParams)

    def __post_init__(self):
        if not self.radius > self.radio.node_comm_range:
            raise ValueError(
                f"jamming radius {self.radius} must exceed node range {self.radio.node_comm_range}"
            )


@dataclass(frozen=True)
class BoundaryObservation:
    node_id: int
    position: Point2D
    received_power: float  # dBm


@dataclass(frozen=True)
class FieldConfig:
    width: float = 100.0
    height: float = 100.0
    node_count: int = 100
    placement_seed: int = 0

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise ValueError("field width and height must be positive")
        if int(self.node_count) != self.node_count or self.node_count < 1:
            raise ValueError("node_count must be a positive integer")
        if int(self.placement_seed) != self.placement_seed or self.placement_seed < 0:
            raise ValueError("placement_seed must be a non-negative integer")


def generate_field(config: FieldConfig) -> list[Node]:
    """Place ``node_count`` nodes i.i.d. uniform over the field rectangle."""
    rng = np.random.default_rng(config.placement_seed)
    xy = rng.uniform((0.0, 0.0), (config.width, config.height), size=(config.node_count, 2))
    return [Node(i, Point2D(float(x), float(y))) for i, (x, y) in enumerate(xy)]


def classify_distance(d: float, jammer_radius: float, node_range: float) -> NodeClass:
    if d > jammer_radius:
        return NodeClass.UNAFFECTED
    if d < jammer_radius - node_range or d < MIN_DISTANCE:
        return NodeClass.JAMMED
    return NodeClass.BOUNDARY


def classify_nodes(nodes: Sequence[Node], jammer: Jammer) -> dict[int, NodeClass]:
    r_n = jammer.radio.node_comm_range
    return {
        n.id: classify_distance(distance(n.position, jammer.position), jammer.radius, r_n)
        for n in nodes
    }


def observe_boundary(
    nodes: Sequence[Node],
    jammer: Jammer,
    rng: np.random.Generator,
    classes: Mapping[int, NodeClass] | None = None,
) -> list[BoundaryObservation]:
    """Jamming power sensed by each boundary node, in node order."""
    if classes is None:
        classes = classify_nodes(nodes, jammer)
    out = []
    for n in nodes:
        if classes[n.id] is not NodeClass.BOUNDARY:
            continue
        sample = received_power(jammer.radio, distance(n.position, jammer.position), rng)
        out.append(BoundaryObservation(n.id, n.position, sample.received))
    return out


# --- jammer placement -------------------------------------------------------

CENTER_HALF_WIDTH = 10.0  # central 20 x 20 m square
EDGE_DEPTH = 10.0  # band along the bottom side
CORNER_SIZE = 20.0  # bottom-left square

REGIONS = ("center", "edge", "corner")


def place_jammer(policy, width: float, height: float, rng: np.random.Generator) -> Point2D:
    """Sample a jammer position for ``policy``.

    ``policy`` is one of ``"center"``, ``"edge"``, ``"corner"`` or a fixed
    ``Point2D``. A fixed position consumes nothing from ``rng``.
    """
    if isinstance(policy, Point2D):
        return policy
    if policy == "center":
        cx, cy = width / 2.0, height / 2.0
        lo = (cx - CENTER_HALF_WIDTH, cy - CENTER_HALF_WIDTH)
        hi = (cx + CENTER_HALF_WIDTH, cy + CENTER_HALF_WIDTH)
    elif policy == "edge":
        lo, hi = (0.0, 0.0), (width, min(EDGE_DEPTH, height))
    elif policy == "corner":
        lo, hi = (0.0, 0.0), (min(CORNER_SIZE, width), min(CORNER_SIZE, height))
    else:
        raise ValueError(f"unknown placement policy {policy!r}")
    x, y = rng.uniform(lo, hi)
    return Point2D(float(x), float(y))

