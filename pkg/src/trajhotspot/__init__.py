"""Approximate dwell-time hotspots of polygonal trajectories."""

from .hotspot import HotspotResult, approximate_hotspot, duration_approx_hotspot
from .rangemax import RangeAddMaxIndex, build
from .sweep import BestWindow, SweepEvent, max_point_weight_square, sweep_events
from .tiling import TilePoints, WeightedPoint, point_weight, tile_edge, tile_trajectory
from .trajectory import (
    Config,
    Edge,
    Square,
    TimedVertex,
    Trajectory,
    TrajectoryError,
    clip_edge_time_interval,
    phi,
    square_weight,
    total_duration,
    total_edge_length,
    validate_trajectory,
)

__all__ = [
    "BestWindow",
    "Config",
    "Edge",
    "HotspotResult",
    "RangeAddMaxIndex",
    "Square",
    "SweepEvent",
    "TilePoints",
    "TimedVertex",
    "Trajectory",
    "TrajectoryError",
    "WeightedPoint",
    "approximate_hotspot",
    "build",
    "clip_edge_time_interval",
    "duration_approx_hotspot",
    "max_point_weight_square",
    "phi",
    "point_weight",
    "square_weight",
    "sweep_events",
    "tile_edge",
    "tile_trajectory",
    "total_duration",
    "total_edge_length",
    "validate_trajectory",
]
