"""Size- and duration-approximate hotspot drivers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .sweep import max_point_weight_square
from .tiling import tile_trajectory
from .trajectory import Config, Square, Trajectory, square_weight

Mode = Literal["size_approx", "duration_approx"]


@dataclass(frozen=True)
class HotspotResult:
    """Returned square plus diagnostics.

    ``point_weight_bound`` is the best sweep value, a lower bound on the
    true weight of ``square``; ``true_weight`` is measured by clipping.
    ``sweep_square`` is the side ``s + eps*s/2`` window the sweep picked;
    ``square`` is its concentric enlargement to side ``s + eps*s``.
    """

    square: Square
    sweep_square: Square
    point_weight_bound: float
    true_weight: float
    mode: Mode
    m_points: int
    params: Config


def _run(traj: Trajectory, cfg: Config, mode: Mode) -> HotspotResult:
    points = tile_trajectory(traj, cfg)
    if len(points) == 0:
        raise RuntimeError("tiling produced no points")
    best = max_point_weight_square(points, cfg.window_side)
    square = best.square.concentric(cfg.result_side)
    return HotspotResult(
        square=square,
        sweep_square=best.square,
        point_weight_bound=best.value,
        true_weight=square_weight(traj, square),
        mode=mode,
        m_points=len(points),
        params=cfg,
    )


def approximate_hotspot(traj: Trajectory, cfg: Config) -> HotspotResult:
    """Square of side ``(1+eps)s`` at least as heavy as any side-``s`` square."""
    return _run(traj, cfg, "size_approx")


def duration_approx_hotspot(traj: Trajectory, side: float) -> HotspotResult:
    """Side-``s`` square whose weight is at least a quarter of the optimum.

    Runs the size-approximate search for side ``s/2`` with ``eps = 1``; the
    enlarged square then has side exactly ``s``.
    """
    return _run(traj, Config(side / 2, 1.0), "duration_approx")
