"""Brute-force references for tests and acceptance runs."""

from __future__ import annotations

import math

import numpy as np

from .sweep import _point_arrays
from .trajectory import Square, Trajectory, square_weights

MAX_BRUTE_FORCE_POINTS = 1000


def brute_force_max_point_weight(points, length: float) -> tuple[float, Square]:
    """Best side-``length`` square among all (point x, point y) min corners.

    O(m^3) work, vectorised per candidate left side.
    """
    xs, ys, ws = _point_arrays(points)
    m = len(xs)
    if m == 0:
        raise ValueError("point list is empty")
    if m > MAX_BRUTE_FORCE_POINTS:
        raise ValueError(f"brute force is limited to {MAX_BRUTE_FORCE_POINTS} points, got {m}")
    if not length > 0:
        raise ValueError("length must be positive")
    # rows: candidate bottom sides; cols: points
    in_row = (ys[None, :] >= ys[:, None]) & (ys[None, :] <= (ys + length)[:, None])
    best_value, best_square = -math.inf, None
    for left in np.unique(xs):
        in_col = (xs >= left) & (xs <= left + length)
        vals = in_row @ np.where(in_col, ws, 0.0)
        k = int(np.argmax(vals))
        if vals[k] > best_value:
            best_value = float(vals[k])
            best_square = Square(float(left), float(ys[k]), float(length))
    return best_value, best_square


def grid_min_corners(traj: Trajectory, side: float, step: float) -> tuple[np.ndarray, np.ndarray]:
    """Min corners ``step * (i, j)`` covering the bounds inflated by ``side``.

    The lattice is anchored at the origin, so halving ``step`` yields a
    superset of candidates.
    """
    if not step > 0:
        raise ValueError("step must be positive")
    x_lo, y_lo, x_hi, y_hi = traj.bounds()

    def axis(lo, hi):
        return step * np.arange(math.floor((lo - side) / step), math.ceil(hi / step) + 1)

    return np.meshgrid(axis(x_lo, x_hi), axis(y_lo, y_hi), indexing="ij")


def grid_lower_bound(traj: Trajectory, side: float, step: float) -> float:
    """Largest weight among side-``side`` squares with min corner on a grid.

    Every candidate is a real placement, so this never exceeds the exact
    hotspot weight.
    """
    mx, my = grid_min_corners(traj, side, step)
    return float(square_weights(traj, mx, my, side).max())
