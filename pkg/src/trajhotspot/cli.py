"""Command line front end.

    trajhotspot --input traj.csv --side 2 [--epsilon 0.5] [--mode size|duration]
                [--json PATH|-] [--svg PATH]
    trajhotspot gen --edges N [--step-mean D] [--duration-mean T] [--seed N] [--output PATH]

Exit status: 0 on success, 2 on bad input, 1 on internal failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .generate import random_walk
from .hotspot import HotspotResult, approximate_hotspot, duration_approx_hotspot
from .io import CsvParseError, emit_svg, ingest_csv, write_csv
from .tiling import tile_trajectory
from .trajectory import Config, Trajectory, TrajectoryError, phi, total_duration, total_edge_length

log = logging.getLogger("trajhotspot")

DEFAULT_EPSILON = 0.5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return v


def _run_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trajhotspot", description="Approximate trajectory hotspots.")
    p.add_argument("--input", required=True, help="trajectory CSV (t,x,y); '-' for stdin")
    p.add_argument("--side", type=_positive, required=True, help="hotspot side length s")
    p.add_argument("--epsilon", type=_positive, default=None,
                   help=f"approximation parameter (default {DEFAULT_EPSILON}; unused in duration mode)")
    p.add_argument("--mode", choices=("size", "duration"), default="size")
    p.add_argument("--json", default="-", help="report destination; '-' for stdout")
    p.add_argument("--svg", default=None, help="optional SVG plot path")
    return p


def _gen_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="trajhotspot gen", description="Generate a random-walk trajectory CSV.")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--step-mean", type=float, default=1.0)
    p.add_argument("--duration-mean", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-", help="CSV destination; '-' for stdout")
    return p


def build_report(traj: Trajectory, result: HotspotResult, wall_time_ms: float) -> dict:
    cfg = result.params
    side = cfg.side * 2 if result.mode == "duration_approx" else cfg.side
    sq = result.square
    return {
        "input": {
            "n": traj.n_edges,
            "total_duration": total_duration(traj),
            "total_edge_length": total_edge_length(traj),
            "phi": phi(traj, side),
        },
        "mode": "duration" if result.mode == "duration_approx" else "size",
        "s": side,
        "epsilon": cfg.eps,
        "m_points": result.m_points,
        "square": {"min_x": sq.min_x, "min_y": sq.min_y, "side": sq.side},
        "point_weight_bound": result.point_weight_bound,
        "true_weight": result.true_weight,
        "wall_time_ms": wall_time_ms,
    }


def _write(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_run(args) -> int:
    if args.mode == "duration" and args.epsilon is not None:
        log.warning("--epsilon is ignored in duration mode (fixed at 1)")
    traj = ingest_csv(args.input)
    start = time.perf_counter()
    if args.mode == "duration":
        result = duration_approx_hotspot(traj, args.side)
    else:
        eps = DEFAULT_EPSILON if args.epsilon is None else args.epsilon
        result = approximate_hotspot(traj, Config(args.side, eps))
    wall_ms = (time.perf_counter() - start) * 1000
    _write(json.dumps(build_report(traj, result, wall_ms)) + "\n", args.json)
    if args.svg:
        emit_svg(traj, result, args.svg, tile_trajectory(traj, result.params))
    return 0


def _cmd_gen(args) -> int:
    traj = random_walk(args.edges, args.step_mean, args.duration_mean, args.seed)
    if args.output == "-":
        write_csv(traj, sys.stdout)
        sys.stdout.flush()
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_csv(traj, fh)
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(levelname)s: %(message)s")
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        if argv and argv[0] == "gen":
            return _cmd_gen(_gen_parser().parse_args(argv[1:]))
        return _cmd_run(_run_parser().parse_args(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    except (TrajectoryError, CsvParseError, ValueError) as exc:
        log.error("%s", exc)
        return 2
    except OSError as exc:
        log.error("%s", exc)
        return 2
    except Exception:
        log.exception("internal failure")
        return 1
