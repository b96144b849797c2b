"""Seeded Monte Carlo harness for comparing the localizers.

Each trial draws a fresh field, a fresh jammer position and fresh shadowing
from streams derived from ``(master_seed, trial_index)`` only, so trials can
run in any order or in parallel and a longer run extends a shorter one.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import NoBoundaryNodes
from .geometry import Point2D
from .localizers import (
    DEFAULT_MIN_ANGLE_DEG,
    CompensationMode,
    Method,
    localization_error,
    localize,
)
from .network import (
    REGIONS,
    FieldConfig,
    Jammer,
    classify_nodes,
    generate_field,
    observe_boundary,
    place_jammer,
)
from .propagation import RadioParams

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One round of the SplitMix64 finalizer (Steele, Lea & Flood)."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    """``splitmix64(splitmix64(master_seed) XOR trial_index)``."""
    return splitmix64(splitmix64(master_seed & _MASK64) ^ (trial_index & _MASK64))


# Sub-stream offsets within a trial.
_FIELD_STREAM, _JAMMER_STREAM, _SHADOW_STREAM = 1, 2, 3


def _substream_seed(seed: int, stream: int) -> int:
    return splitmix64((seed + stream) & _MASK64)


@dataclass(frozen=True)
class ScenarioConfig:
    field: FieldConfig = dataclasses.field(default_factory=FieldConfig)
    radio: RadioParams = dataclasses.field(default_factory=RadioParams)
    jammer_radius: float = 30.0
    placement: str | Point2D = "center"
    methods: tuple[Method, ...] = (Method.CL, Method.CJ, Method.GJL)
    gjl_mode: CompensationMode = CompensationMode.PAPER_EQ8
    min_angle_deg: float = DEFAULT_MIN_ANGLE_DEG
    trials: int = 500
    master_seed: int = 0

    def __post_init__(self):
        methods = tuple(dict.fromkeys(Method(m) for m in self.methods))
        if not methods:
            raise ValueError("at least one method is required")
        object.__setattr__(self, "methods", methods)
        object.__setattr__(self, "gjl_mode", CompensationMode(self.gjl_mode))
        if not isinstance(self.placement, Point2D) and self.placement not in REGIONS:
            raise ValueError(f"placement must be one of {REGIONS} or a fixed point")
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError("trials must be a positive integer")
        if int(self.master_seed) != self.master_seed or self.master_seed < 0:
            raise ValueError("master_seed must be a non-negative integer")
        if not math.isfinite(self.jammer_radius) or self.jammer_radius <= self.radio.node_comm_range:
            raise ValueError("jammer_radius must exceed radio.node_comm_range")
        if not 0.0 <= self.min_angle_deg <= 90.0:
            raise ValueError("min_angle_deg must lie in [0, 90]")

    def to_dict(self) -> dict:
        placement = (
            {"fixed": [self.placement.x, self.placement.y]}
            if isinstance(self.placement, Point2D)
            else self.placement
        )
        return {
            "field": dataclasses.asdict(self.field),
            "radio": dataclasses.asdict(self.radio),
            "jammer_radius": self.jammer_radius,
            "placement": placement,
            "methods": [m.value for m in self.methods],
            "gjl_mode": self.gjl_mode.value,
            "min_angle_deg": self.min_angle_deg,
            "trials": self.trials,
            "master_seed": self.master_seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ScenarioConfig:
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kw = dict(data)
        if "field" in kw:
            kw["field"] = FieldConfig(**kw["field"])
        if "radio" in kw:
            kw["radio"] = RadioParams(**kw["radio"])
        placement = kw.get("placement")
        if isinstance(placement, dict):
            if set(placement) != {"fixed"} or len(placement["fixed"]) != 2:
                raise ValueError('fixed placement must look like {"fixed": [x, y]}')
            kw["placement"] = Point2D(*map(float, placement["fixed"]))
        if "methods" in kw:
            kw["methods"] = tuple(kw["methods"])
        return cls(**kw)


@dataclass(frozen=True)
class MethodOutcome:
    method: Method
    mode: CompensationMode | None  # only set for GJL
    estimate: Point2D | None
    error: float | None
    fallback: bool = False

    @property
    def failed(self) -> bool:
        return self.estimate is None


@dataclass(frozen=True)
class TrialRecord:
    trial_index: int
    jammer_truth: Point2D
    boundary_count: int
    outcomes: tuple[MethodOutcome, ...]

    def outcome(self, method: Method | str) -> MethodOutcome:
        method = Method(method)
        for o in self.outcomes:
            if o.method is method:
                return o
        raise KeyError(method)


@dataclass(frozen=True)
class MethodSummary:
    method: Method
    mode: CompensationMode | None
    trials: int
    clean: int
    fallbacks: int
    failures: int
    mean_error: float
    std_error: float
    median_error: float


@dataclass(frozen=True)
class TrialScene:
    """Everything a trial sees before localization; used for snapshots."""

    nodes: list
    jammer: Jammer
    classes: dict
    observations: list


def build_scene(config: ScenarioConfig, trial_index: int) -> TrialScene:
    seed = trial_seed(config.master_seed, trial_index)
    fc = dataclasses.replace(config.field, placement_seed=_substream_seed(seed, _FIELD_STREAM))
    nodes = generate_field(fc)
    jrng = np.random.default_rng(_substream_seed(seed, _JAMMER_STREAM))
    pos = place_jammer(config.placement, fc.width, fc.height, jrng)
    jammer = Jammer(pos, config.jammer_radius, config.radio)
    classes = classify_nodes(nodes, jammer)
    srng = np.random.default_rng(_substream_seed(seed, _SHADOW_STREAM))
    observations = observe_boundary(nodes, jammer, srng, classes)
    return TrialScene(nodes, jammer, classes, observations)


def _mode_for(method: Method, config: ScenarioConfig) -> CompensationMode | None:
    return config.gjl_mode if method is Method.GJL else None


def localize_scene(scene: TrialScene, config: ScenarioConfig) -> dict:
    """Estimates per method; ``None`` marks a method that had nothing to work with."""
    out = {}
    for m in config.methods:
        try:
            out[m] = localize(scene.observations, m, config.gjl_mode, config.min_angle_deg)
        except NoBoundaryNodes:
            out[m] = None
    return out


def run_trial(config: ScenarioConfig, trial_index: int) -> TrialRecord:
    scene = build_scene(config, trial_index)
    truth = scene.jammer.position
    outcomes = []
    for m, est in localize_scene(scene, config).items():
        if est is None:
            outcomes.append(MethodOutcome(m, _mode_for(m, config), None, None))
        else:
            outcomes.append(MethodOutcome(
                m, _mode_for(m, config), est.position, localization_error(est, truth), est.fallback
            ))
    return TrialRecord(trial_index, truth, len(scene.observations), tuple(outcomes))


def _run_trial_args(args):
    return run_trial(*args)


def _resolve_workers(workers: int | None) -> int:
    if workers is None or workers == 0:
        return 1
    if workers < 0:
        return os.cpu_count() or 1
    return workers


def summarize(records: Sequence[TrialRecord], config: ScenarioConfig) -> dict[Method, MethodSummary]:
    """Per-method statistics; failed trials are counted but excluded from the errors."""
    summary = {}
    for m in config.methods:
        outs = [r.outcome(m) for r in records]
        errors = np.array([o.error for o in outs if not o.failed], dtype=float)
        failures = sum(o.failed for o in outs)
        fallbacks = sum(o.fallback for o in outs if not o.failed)
        if errors.size:
            mean, median = float(np.mean(errors)), float(np.median(errors))
            std = float(np.std(errors, ddof=1)) if errors.size > 1 else 0.0
        else:
            mean = std = median = math.nan
        summary[m] = MethodSummary(
            m, _mode_for(m, config), len(outs), len(outs) - failures - fallbacks,
            fallbacks, failures, mean, std, median,
        )
    return summary


def run_experiment(
    config: ScenarioConfig, workers: int | None = 1
) -> tuple[list[TrialRecord], dict[Method, MethodSummary]]:
    """Run ``config.trials`` independent trials.

    ``workers > 1`` spreads trials over a process pool, ``-1`` uses every
    CPU. The records come back ordered by trial index either way.
    """
    n = _resolve_workers(workers)
    jobs = [(config, i) for i in range(config.trials)]
    if n == 1:
        records = [run_trial(c, i) for c, i in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            records = list(pool.map(_run_trial_args, jobs, chunksize=max(1, len(jobs) // (4 * n))))
    records.sort(key=lambda r: r.trial_index)
    return records, summarize(records, config)


# --- sweeps -----------------------------------------------------------------

AXES = ("density", "region", "radius")


@dataclass(frozen=True)
class SweepRow:
    axis: str
    value: object
    summary: MethodSummary


def apply_axis(base: ScenarioConfig, axis: str, value) -> ScenarioConfig:
    if axis == "density":
        return dataclasses.replace(base, field=dataclasses.replace(base.field, node_count=int(value)))
    if axis == "region":
        return dataclasses.replace(base, placement=value)
    if axis == "radius":
        return dataclasses.replace(base, jammer_radius=float(value))
    raise ValueError(f"unknown sweep axis {axis!r}; expected one of {AXES}")


def sweep(
    base: ScenarioConfig, axis: str, values: Iterable, workers: int | None = 1
) -> list[SweepRow]:
    """One ``run_experiment`` per value with everything else held fixed."""
    values = list(values)
    configs = [apply_axis(base, axis, v) for v in values]
    rows = []
    for v, cfg in zip(values, configs):
        _, summary = run_experiment(cfg, workers)
        rows.extend(SweepRow(axis, v, s) for s in summary.values())
    return rows


def compare(config: ScenarioConfig, workers: int | None = 1) -> tuple[list[MethodSummary], dict[str, float]]:
    """CL, CJ and GJL in both compensation modes on one scenario.

    Returns the four summaries and the GJL/CL mean-error ratio per mode.
    All runs share the master seed, so they see the same fields.
    """
    base = dataclasses.replace(config, methods=(Method.CL, Method.CJ))
    _, s = run_experiment(base, workers)
    summaries = [s[Method.CL], s[Method.CJ]]
    ratios = {}
    for mode in CompensationMode:
        cfg = dataclasses.replace(config, methods=(Method.GJL,), gjl_mode=mode)
        _, g = run_experiment(cfg, workers)
        summaries.append(g[Method.GJL])
        ratios[mode.value] = g[Method.GJL].mean_error / s[Method.CL].mean_error
    return summaries, ratios


# --- CSV output -------------------------------------------------------------

SWEEP_HEADER = ["axis", "value", "method", "mode", "trials", "failures", "fallbacks",
                "mean_error", "std_error", "median_error"]
RECORD_HEADER = ["trial_index", "jammer_x", "jammer_y", "boundary_count", "method", "mode",
                 "status", "x", "y", "error"]


def fmt(v) -> str:
    """CSV cell formatting: floats with 6 decimals, ``None`` as empty."""
    if v is None:
        return ""
    if isinstance(v, enum.Enum):
        return str(v.value)
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.6f}"
    return str(v)


def _mode_cell(mode: CompensationMode | None) -> str:
    return mode.value if mode is not None else "na"


def _writer(f: TextIO):
    return csv.writer(f, lineterminator="\n")


def write_sweep_csv(rows: Iterable[SweepRow], f: TextIO) -> None:
    w = _writer(f)
    w.writerow(SWEEP_HEADER)
    for r in rows:
        s = r.summary
        w.writerow([r.axis, fmt(r.value), s.method.value, _mode_cell(s.mode), s.trials,
                    s.failures, s.fallbacks, fmt(s.mean_error), fmt(s.std_error),
                    fmt(s.median_error)])


def _status(o: MethodOutcome) -> str:
    if o.failed:
        return "failure"
    return "fallback" if o.fallback else "ok"


def write_records_csv(records: Iterable[TrialRecord], f: TextIO) -> None:
    w = _writer(f)
    w.writerow(RECORD_HEADER)
    for r in records:
        for o in r.outcomes:
            x = y = None
            if o.estimate is not None:
                x, y = o.estimate.x, o.estimate.y
            w.writerow([r.trial_index, fmt(r.jammer_truth.x), fmt(r.jammer_truth.y),
                        r.boundary_count, o.method.value, _mode_cell(o.mode), _status(o),
                        fmt(x), fmt(y), fmt(o.error)])


def records_csv_text(records: Iterable[TrialRecord]) -> str:
    buf = io.StringIO()
    write_records_csv(records, buf)
    return buf.getvalue()
