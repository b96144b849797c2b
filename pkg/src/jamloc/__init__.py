"""Jammer localization in simulated wireless sensor fields."""

from .errors import (
    DegenerateSegment,
    EmptyPointSet,
    InsufficientBoundaryNodes,
    JamlocError,
    NearParallelLines,
    NoBoundaryNodes,
    NonPositiveDistance,
    NoTransverseChord,
)
from .experiment import ScenarioConfig, run_experiment, run_trial, sweep
from .geometry import Circle, Line, Point2D, Segment, convex_hull, min_enclosing_circle
from .localizers import (
    CompensationMode,
    Method,
    centroid_localize,
    cj_localize,
    gjl_localize,
    localization_error,
    localize,
)
from .network import BoundaryObservation, FieldConfig, Jammer, NodeClass
from .propagation import RadioParams

__version__ = "0.1.0"
