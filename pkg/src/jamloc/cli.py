"""Command-line entry point: ``jamloc {simulate,sweep,compare}``.

Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from pathlib import Path

from .errors import InvariantViolation
from .experiment import (
    AXES,
    ScenarioConfig,
    SweepRow,
    build_scene,
    compare,
    fmt,
    localize_scene,
    sweep,
    write_sweep_csv,
)
from .geometry import Point2D
from .localizers import CompensationMode, Method, localization_error
from .network import REGIONS, NodeClass

EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_INTERNAL = 0, 1, 2, 3

NODES_HEADER = ["node_id", "x", "y", "class", "received_power"]
ESTIMATE_HEADER = ["method", "x", "y", "error", "fallback"]
DIAGNOSTICS_HEADER = [
    "chord", "node_1_id", "node_1_x", "node_1_y", "node_1_power",
    "node_2_id", "node_2_x", "node_2_y", "node_2_power", "d_12", "k", "delta_l", "t",
]

_MODE_ALIASES = {"paper": CompensationMode.PAPER_EQ8, "geometric": CompensationMode.GEOMETRIC_D0}


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument errors are configuration errors (exit 1), not argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _parse_point(text: str) -> Point2D:
    try:
        x, y = (float(v) for v in text.split(","))
        return Point2D(x, y)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON scenario file")
    common.add_argument("--seed", type=int, help="master seed")
    common.add_argument("--out", type=Path,
                        help="output directory (compare writes compare.csv only when given)")
    common.add_argument("--trials", type=int)
    common.add_argument("--nodes", type=int, help="number of sensor nodes")
    common.add_argument("--radius", type=float, help="jamming radius (m)")
    common.add_argument("--region", choices=REGIONS, help="jammer placement region")
    common.add_argument("--jammer", type=_parse_point, metavar="X,Y",
                        help="fixed jammer position (overrides --region)")
    common.add_argument("--sigma", type=float, help="shadowing std. dev. (dB)")
    common.add_argument("--gjl-mode", choices=sorted(_MODE_ALIASES))
    common.add_argument("--min-angle", type=float, help="chord angle gate (degrees)")
    common.add_argument("--methods", help="comma-separated subset of CL,CJ,GJL")
    common.add_argument("--workers", type=int, default=1,
                        help="worker processes for trials (-1: all CPUs)")
    common.add_argument("--dump-config", action="store_true",
                        help="print the effective config as JSON and exit")

    parser = _Parser(prog="jamloc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("simulate", parents=[common], help="one trial with node snapshot")
    sp = sub.add_parser("sweep", parents=[common], help="sweep one scenario axis")
    sp.add_argument("--axis", choices=AXES, required=True)
    sp.add_argument("--values", required=True, help="comma-separated axis values")
    sub.add_parser("compare", parents=[common], help="CL vs CJ vs GJL (both modes)")
    return parser


def effective_config(args: argparse.Namespace) -> ScenarioConfig:
    data: dict = {}
    if args.config is not None:
        try:
            data = json.loads(args.config.read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
    try:
        cfg = ScenarioConfig.from_dict(data)
        field, radio = cfg.field, cfg.radio
        if args.nodes is not None:
            field = dataclasses.replace(field, node_count=args.nodes)
        if args.sigma is not None:
            radio = dataclasses.replace(radio, shadowing_sigma=args.sigma)
        over = {"field": field, "radio": radio}
        if args.seed is not None:
            over["master_seed"] = args.seed
        if args.trials is not None:
            over["trials"] = args.trials
        if args.radius is not None:
            over["jammer_radius"] = args.radius
        if args.region is not None:
            over["placement"] = args.region
        if args.jammer is not None:
            over["placement"] = args.jammer
        if args.gjl_mode is not None:
            over["gjl_mode"] = _MODE_ALIASES[args.gjl_mode]
        if args.min_angle is not None:
            over["min_angle_deg"] = args.min_angle
        if args.methods is not None:
            over["methods"] = tuple(m.strip().upper() for m in args.methods.split(",") if m.strip())
        return dataclasses.replace(cfg, **over)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def _parse_values(axis: str, text: str) -> list:
    values = [v.strip() for v in text.split(",") if v.strip()]
    if not values:
        raise ConfigError("--values must list at least one value")
    try:
        if axis == "density":
            return [int(v) for v in values]
        if axis == "radius":
            return [float(v) for v in values]
    except ValueError as exc:
        raise ConfigError(f"bad {axis} value: {exc}") from exc
    bad = [v for v in values if v not in REGIONS]
    if bad:
        raise ConfigError(f"unknown regions {bad}; expected {REGIONS}")
    return values


def _open_out(out: Path, name: str):
    out.mkdir(parents=True, exist_ok=True)
    return open(out / name, "w", newline="", encoding="utf-8")


def _writer(f):
    return csv.writer(f, lineterminator="\n")


def cmd_simulate(cfg: ScenarioConfig, out: Path) -> None:
    scene = build_scene(cfg, 0)
    truth = scene.jammer.position
    power = {o.node_id: o.received_power for o in scene.observations}
    estimates = localize_scene(scene, cfg)

    for n in scene.nodes:
        if (n.id in power) != (scene.classes[n.id] is NodeClass.BOUNDARY):
            raise InvariantViolation(f"node {n.id} observed but not boundary (or vice versa)")

    with _open_out(out, "nodes.csv") as f:
        w = _writer(f)
        w.writerow(NODES_HEADER)
        for n in scene.nodes:
            w.writerow([n.id, fmt(n.position.x), fmt(n.position.y),
                        scene.classes[n.id].value, fmt(power.get(n.id))])

    with _open_out(out, "estimate.csv") as f:
        w = _writer(f)
        w.writerow(ESTIMATE_HEADER)
        for m, est in estimates.items():
            if est is None:
                w.writerow([m.value, "", "", "", ""])
            else:
                w.writerow([m.value, fmt(est.x), fmt(est.y),
                            fmt(localization_error(est, truth)), fmt(est.fallback)])

    gjl = estimates.get(Method.GJL)
    if Method.GJL in cfg.methods:
        with _open_out(out, "diagnostics.csv") as f:
            w = _writer(f)
            w.writerow(DIAGNOSTICS_HEADER)
            if gjl is not None and gjl.diagnostics is not None:
                for i, c in enumerate(gjl.diagnostics.chords, start=1):
                    w.writerow([i, c.node_1.node_id, fmt(c.node_1.position.x),
                                fmt(c.node_1.position.y), fmt(c.node_1.received_power),
                                c.node_2.node_id, fmt(c.node_2.position.x),
                                fmt(c.node_2.position.y), fmt(c.node_2.received_power),
                                fmt(c.d_12), fmt(c.k), fmt(c.delta_l), fmt(c.t)])

    print(f"jammer truth: ({truth.x:.6f}, {truth.y:.6f})  boundary nodes: {len(scene.observations)}")
    for m, est in estimates.items():
        label = m.value + (f" ({cfg.gjl_mode.value})" if m is Method.GJL else "")
        if est is None:
            print(f"{label:16s} failed: no boundary nodes")
        else:
            note = "  [fallback to CJ]" if est.fallback else ""
            print(f"{label:16s} error {localization_error(est, truth):.6f} m{note}")


def cmd_sweep(cfg: ScenarioConfig, axis: str, values: list, out: Path, workers: int) -> Path:
    rows = sweep(cfg, axis, values, workers)
    path = out / f"sweep_{axis}.csv"
    with _open_out(out, path.name) as f:
        write_sweep_csv(rows, f)
    print(f"wrote {len(rows)} rows to {path}")
    return path


def cmd_compare(cfg: ScenarioConfig, out: Path | None, workers: int) -> None:
    summaries, ratios = compare(cfg, workers)
    if out is not None:
        with _open_out(out, "compare.csv") as f:
            write_sweep_csv([SweepRow("scenario", "base", s) for s in summaries], f)
    print(f"{'method':8s} {'mode':10s} {'trials':>6s} {'fail':>5s} {'fallbk':>6s} "
          f"{'mean':>10s} {'std':>10s} {'median':>10s}")
    for s in summaries:
        mode = s.mode.value if s.mode is not None else "-"
        print(f"{s.method.value:8s} {mode:10s} {s.trials:6d} {s.failures:5d} {s.fallbacks:6d} "
              f"{s.mean_error:10.6f} {s.std_error:10.6f} {s.median_error:10.6f}")
    for mode, r in ratios.items():
        print(f"ratio GJL({mode})/CL mean error: {r:.6f}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = effective_config(args)
        if args.dump_config:
            print(json.dumps(cfg.to_dict(), indent=2, sort_keys=True))
            return EXIT_OK
        if args.command == "simulate":
            cmd_simulate(cfg, args.out or Path("."))
        elif args.command == "sweep":
            cmd_sweep(cfg, args.axis, _parse_values(args.axis, args.values),
                      args.out or Path("."), args.workers)
        else:
            cmd_compare(cfg, args.out, args.workers)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
