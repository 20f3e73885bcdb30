"""Trajectories, closed axis-aligned squares and exact dwell-time evaluation.

A trajectory is a timestamped polyline; between consecutive vertices the
entity moves in a straight line at constant speed.  The weight of a square is
the total time the entity spends inside it, computed by clipping every edge
against the square (parametric, Liang-Barsky style).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class TrajectoryError(ValueError):
    """Raised for malformed trajectory input."""


@dataclass(frozen=True)
class TimedVertex:
    t: float
    x: float
    y: float


@dataclass(frozen=True)
class Edge:
    a: TimedVertex
    b: TimedVertex

    def __post_init__(self):
        if not self.a.t < self.b.t:
            raise TrajectoryError("edge must have a.t < b.t")

    @property
    def duration(self) -> float:
        return self.b.t - self.a.t

    @property
    def length(self) -> float:
        return math.hypot(self.b.x - self.a.x, self.b.y - self.a.y)


@dataclass(frozen=True)
class Square:
    """Closed square ``[min_x, min_x + side] x [min_y, min_y + side]``."""

    min_x: float
    min_y: float
    side: float

    def __post_init__(self):
        if not (self.side > 0 and math.isfinite(self.side)):
            raise ValueError(f"square side must be positive and finite, got {self.side!r}")

    @property
    def max_x(self) -> float:
        return self.min_x + self.side

    @property
    def max_y(self) -> float:
        return self.min_y + self.side

    @property
    def center(self) -> tuple[float, float]:
        half = self.side / 2
        return self.min_x + half, self.min_y + half

    @classmethod
    def centered(cls, cx: float, cy: float, side: float) -> "Square":
        half = side / 2
        return cls(cx - half, cy - half, side)

    def concentric(self, side: float) -> "Square":
        """Square of a different side length with the same centre."""
        cx, cy = self.center
        return Square.centered(cx, cy, side)

    def contains(self, x: float, y: float) -> bool:
        return self.min_x <= x <= self.max_x and self.min_y <= y <= self.max_y

    def contains_square(self, other: "Square") -> bool:
        return (
            self.min_x <= other.min_x
            and self.min_y <= other.min_y
            and other.max_x <= self.max_x
            and other.max_y <= self.max_y
        )


@dataclass(frozen=True)
class Config:
    """Hotspot side length and approximation parameter."""

    side: float
    eps: float

    def __post_init__(self):
        object.__setattr__(self, "side", float(self.side))
        object.__setattr__(self, "eps", float(self.eps))
        if not (self.side > 0 and math.isfinite(self.side)):
            raise ValueError(f"side must be positive and finite, got {self.side!r}")
        if not (self.eps > 0 and math.isfinite(self.eps)):
            raise ValueError(f"eps must be positive and finite, got {self.eps!r}")

    @property
    def tile_side(self) -> float:
        return self.eps * self.side / 2

    @property
    def window_side(self) -> float:
        """Side of the sweep window, ``s + eps*s/2``."""
        return self.side + self.eps * self.side / 2

    @property
    def result_side(self) -> float:
        """Side of the reported square, ``s + eps*s``."""
        return self.side + self.eps * self.side


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


class Trajectory:
    """Validated trajectory stored as three read-only float arrays.

    Build with :func:`validate_trajectory` or :meth:`from_arrays`; both
    reject fewer than two vertices, non-finite values and timestamps that
    are not strictly increasing.
    """

    __slots__ = ("t", "x", "y")

    def __init__(self, t, x, y):
        t, x, y = (np.asarray(v, dtype=np.float64) for v in (t, x, y))
        _check_arrays(t, x, y)
        self.t = _readonly(t)
        self.x = _readonly(x)
        self.y = _readonly(y)

    @classmethod
    def from_arrays(cls, t, x, y) -> "Trajectory":
        return cls(t, x, y)

    def __len__(self) -> int:
        return len(self.t)

    def __repr__(self) -> str:
        return f"Trajectory(n_edges={self.n_edges}, duration={total_duration(self)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trajectory):
            return NotImplemented
        return (
            np.array_equal(self.t, other.t)
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.y, other.y)
        )

    __hash__ = None

    @property
    def n_edges(self) -> int:
        return len(self.t) - 1

    @property
    def vertices(self) -> tuple[TimedVertex, ...]:
        return tuple(
            TimedVertex(float(t), float(x), float(y))
            for t, x, y in zip(self.t, self.x, self.y)
        )

    def vertex(self, i: int) -> TimedVertex:
        return TimedVertex(float(self.t[i]), float(self.x[i]), float(self.y[i]))

    def edge(self, i: int) -> Edge:
        if not 0 <= i < self.n_edges:
            raise IndexError(f"edge index {i} out of range")
        return Edge(self.vertex(i), self.vertex(i + 1))

    def edges(self) -> Iterator[Edge]:
        for i in range(self.n_edges):
            yield self.edge(i)

    def bounds(self) -> tuple[float, float, float, float]:
        """``(min_x, min_y, max_x, max_y)`` of all vertices."""
        return (
            float(self.x.min()),
            float(self.y.min()),
            float(self.x.max()),
            float(self.y.max()),
        )

    def translated(self, dx: float, dy: float) -> "Trajectory":
        return Trajectory(self.t, self.x + dx, self.y + dy)


def _check_arrays(t: np.ndarray, x: np.ndarray, y: np.ndarray) -> None:
    if not (t.ndim == x.ndim == y.ndim == 1) or not (len(t) == len(x) == len(y)):
        raise TrajectoryError("t, x, y must be 1-d arrays of equal length")
    if len(t) < 2:
        raise TrajectoryError("fewer than 2 vertices")
    finite = np.isfinite(t) & np.isfinite(x) & np.isfinite(y)
    if not finite.all():
        i = int(np.argmin(finite))
        raise TrajectoryError(f"non-finite value at index {i}")
    bad = np.flatnonzero(np.diff(t) <= 0)
    if bad.size:
        raise TrajectoryError(f"non-increasing timestamp at index {int(bad[0]) + 1}")


def validate_trajectory(raw: Iterable[TimedVertex | Sequence[float]]) -> Trajectory:
    """Build a :class:`Trajectory` from vertices or ``(t, x, y)`` triples."""
    rows = []
    for i, v in enumerate(raw):
        if isinstance(v, TimedVertex):
            rows.append((v.t, v.x, v.y))
            continue
        if len(v) != 3:
            raise TrajectoryError(f"vertex at index {i} must have 3 fields (t, x, y)")
        rows.append(tuple(v))
    try:
        arr = np.array(rows, dtype=np.float64).reshape(-1, 3)
    except (TypeError, ValueError) as exc:
        raise TrajectoryError(f"non-numeric vertex value: {exc}") from None
    return Trajectory(arr[:, 0], arr[:, 1], arr[:, 2])


def total_duration(traj: Trajectory) -> float:
    return float(traj.t[-1] - traj.t[0])


def edge_lengths(traj: Trajectory) -> np.ndarray:
    return np.hypot(np.diff(traj.x), np.diff(traj.y))


def total_edge_length(traj: Trajectory) -> float:
    return math.fsum(edge_lengths(traj))


def phi(traj: Trajectory, side: float) -> float:
    """Average edge length divided by the hotspot side."""
    if not side > 0:
        raise ValueError("side must be positive")
    return total_edge_length(traj) / traj.n_edges / side


def clip_edge_time_interval(e: Edge, r: Square) -> tuple[float, float] | None:
    """Closed time interval during which the entity on ``e`` is inside ``r``.

    Returns ``None`` when the edge misses the square.  Grazing contact gives
    a degenerate interval ``(t, t)``.
    """
    x0, y0 = e.a.x, e.a.y
    u0, u1 = 0.0, 1.0
    for p0, d, lo, hi in (
        (x0, e.b.x - x0, r.min_x, r.max_x),
        (y0, e.b.y - y0, r.min_y, r.max_y),
    ):
        if d == 0:
            if p0 < lo or p0 > hi:
                return None
            continue
        a = (lo - p0) / d
        b = (hi - p0) / d
        if a > b:
            a, b = b, a
        if a > u0:
            u0 = a
        if b < u1:
            u1 = b
        if u0 > u1:
            return None
    dt = e.b.t - e.a.t
    t0 = e.a.t if u0 == 0.0 else e.a.t + u0 * dt
    t1 = e.b.t if u1 == 1.0 else e.a.t + u1 * dt
    return t0, min(max(t1, t0), e.b.t)


def _clip_durations(x0, y0, dx, dy, dt, min_x, min_y, max_x, max_y) -> np.ndarray:
    """Vectorised clipping; arguments broadcast, returns time spent inside."""
    u0 = np.zeros(np.broadcast(x0, min_x).shape)
    u1 = np.ones_like(u0)
    ok = np.ones(u0.shape, dtype=bool)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        for p0, d, lo, hi in ((x0, dx, min_x, max_x), (y0, dy, min_y, max_y)):
            still = d == 0
            ok &= ~still | ((lo <= p0) & (p0 <= hi))
            a = (lo - p0) / d
            b = (hi - p0) / d
            lo_u = np.where(still, 0.0, np.minimum(a, b))
            hi_u = np.where(still, 1.0, np.maximum(a, b))
            u0 = np.maximum(u0, lo_u)
            u1 = np.minimum(u1, hi_u)
    ok &= u0 <= u1
    return np.where(ok, (u1 - u0) * dt, 0.0)


def square_weight(traj: Trajectory, r: Square) -> float:
    """Total time the entity spends inside the closed square ``r``."""
    x0, y0 = traj.x[:-1], traj.y[:-1]
    d = _clip_durations(
        x0, y0, np.diff(traj.x), np.diff(traj.y), np.diff(traj.t),
        r.min_x, r.min_y, r.max_x, r.max_y,
    )
    return math.fsum(d)


def square_weights(traj: Trajectory, min_x, min_y, side: float, chunk: int = 1 << 21) -> np.ndarray:
    """Weights of many equal-side squares given by arrays of min corners."""
    min_x = np.asarray(min_x, dtype=np.float64).ravel()
    min_y = np.asarray(min_y, dtype=np.float64).ravel()
    x0, y0 = traj.x[:-1], traj.y[:-1]
    dx, dy, dt = np.diff(traj.x), np.diff(traj.y), np.diff(traj.t)
    out = np.empty(len(min_x))
    step = max(1, chunk // max(1, traj.n_edges))
    for s in range(0, len(min_x), step):
        mx = min_x[s:s + step, None]
        my = min_y[s:s + step, None]
        d = _clip_durations(x0, y0, dx, dy, dt, mx, my, mx + side, my + side)
        out[s:s + step] = d.sum(axis=1)
    return out
