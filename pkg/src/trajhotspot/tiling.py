"""Edge subdivision into tile-sized pieces and weighted tile centres.

Each edge is cut by time into ``k`` equal pieces, with ``k`` the smallest
count for which every piece's bounding box fits in a square of side
``eps*s/2``.  Every piece gets a tile of that side centred on its bounding
box; the tile centre carries the piece's duration as weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numba import njit

from .trajectory import Config, Edge, Square, Trajectory


@dataclass(frozen=True)
class WeightedPoint:
    x: float
    y: float
    weight: float
    tile: Square
    seg_t0: float
    seg_t1: float
    edge_index: int


@dataclass(frozen=True)
class TilePoints:
    """Struct-of-arrays collection of weighted tile centres.

    Indexing and iteration yield :class:`WeightedPoint` views; the arrays are
    what the sweep consumes.
    """

    x: np.ndarray
    y: np.ndarray
    weight: np.ndarray
    seg_t0: np.ndarray
    seg_t1: np.ndarray
    edge_index: np.ndarray
    tile_side: float

    def __len__(self) -> int:
        return len(self.x)

    def __getitem__(self, i: int) -> WeightedPoint:
        x, y = float(self.x[i]), float(self.y[i])
        return WeightedPoint(
            x=x,
            y=y,
            weight=float(self.weight[i]),
            tile=Square.centered(x, y, self.tile_side),
            seg_t0=float(self.seg_t0[i]),
            seg_t1=float(self.seg_t1[i]),
            edge_index=int(self.edge_index[i]),
        )

    def __iter__(self) -> Iterator[WeightedPoint]:
        for i in range(len(self)):
            yield self[i]

    def total_weight(self) -> float:
        return math.fsum(self.weight)


@njit(cache=True)
def _pieces(dx, dy, tile_side):
    """Number of time-equal pieces needed so each bounding box fits a tile."""
    n = len(dx)
    k = np.empty(n, np.int64)
    for e in range(n):
        extent = max(abs(dx[e]), abs(dy[e]))
        c = max(math.ceil(extent / tile_side), 1.0)
        # ceil can land one short when extent/tile_side rounds down
        if extent / c > tile_side:
            c += 1.0
        k[e] = int(c)
    return k


def pieces_per_edge(dx, dy, tile_side: float) -> np.ndarray:
    return _pieces(np.asarray(dx, np.float64), np.asarray(dy, np.float64), float(tile_side))


@njit(cache=True)
def _cut(t, x, y, k, first_edge):
    m = 0
    for e in range(len(k)):
        m += k[e]
    px = np.empty(m)
    py = np.empty(m)
    w = np.empty(m)
    t0s = np.empty(m)
    t1s = np.empty(m)
    edge = np.empty(m, np.int64)
    q = 0
    for e in range(len(k)):
        ke = k[e]
        dt = t[e + 1] - t[e]
        dx = x[e + 1] - x[e]
        dy = y[e + 1] - y[e]
        ta, xa, ya = t[e], x[e], y[e]
        for j in range(ke):
            # closed form per piece boundary; the final boundary is the vertex itself
            if j + 1 == ke:
                t1, x1, y1 = t[e + 1], x[e + 1], y[e + 1]
            else:
                t1 = ta + ((j + 1) * dt) / ke
                x1 = xa + ((j + 1) * dx) / ke
                y1 = ya + ((j + 1) * dy) / ke
            if j == 0:
                t0, x0, y0 = ta, xa, ya
            if t1 > t0:
                px[q] = (x0 + x1) / 2
                py[q] = (y0 + y1) / 2
                w[q] = t1 - t0
                t0s[q] = t0
                t1s[q] = t1
                edge[q] = e + first_edge
                q += 1
            t0, x0, y0 = t1, x1, y1
    return px[:q], py[:q], w[:q], t0s[:q], t1s[:q], edge[:q]


def _tile_arrays(t, x, y, tile_side: float, first_edge: int = 0) -> TilePoints:
    t, x, y = (np.asarray(v, dtype=np.float64) for v in (t, x, y))
    k = _pieces(np.diff(x), np.diff(y), float(tile_side))
    px, py, w, t0, t1, edge = _cut(t, x, y, k, first_edge)
    return TilePoints(px, py, w, t0, t1, edge, tile_side)


def tile_edge(e: Edge, cfg: Config, edge_index: int = 0) -> list[WeightedPoint]:
    t = np.array([e.a.t, e.b.t])
    x = np.array([e.a.x, e.b.x])
    y = np.array([e.a.y, e.b.y])
    return list(_tile_arrays(t, x, y, cfg.tile_side, first_edge=edge_index))


def tile_trajectory(traj: Trajectory, cfg: Config) -> TilePoints:
    """Weighted tile centres for every edge, in edge order."""
    return _tile_arrays(traj.t, traj.x, traj.y, cfg.tile_side)


def point_count_bound(total_length: float, n_edges: int, cfg: Config) -> float:
    """Upper bound ``2a/(eps*s) + n`` on the number of emitted points."""
    return 2 * total_length / (cfg.eps * cfg.side) + n_edges


def point_weight(points: TilePoints, r: Square) -> float:
    """Sum of weights of the points inside the closed square ``r``."""
    inside = (
        (points.x >= r.min_x) & (points.x <= r.max_x)
        & (points.y >= r.min_y) & (points.y <= r.max_y)
    )
    return math.fsum(points.weight[inside])
