"""Maximum point-weight square of a fixed side via two vertical sweep lines.

Points are sorted by ``y`` into rows; row ``k`` stands for the window whose
bottom side passes through the ``k``-th point.  The left sweep line visits
every distinct point ``x`` in increasing order; the right line trails it at
distance ``L``.  A point enters when the right line reaches it and leaves
once the left line has passed it; entering or leaving adds its weight to
the contiguous block of rows whose vertical extent holds it.  The largest
row value after each step is the best window with that left side.

Window membership uses the same floating-point predicate as
:meth:`Square.contains` (``min <= v <= min + side``), so the reported square
holds exactly the point set whose weight was counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np
from numba import njit

from .rangemax import _argmax, _max_value, _new_tree, _prefetch_op, _range_add
from .tiling import TilePoints, WeightedPoint
from .trajectory import Square

# events between a prefetch and the update that uses it
PREFETCH_AHEAD = 8


@dataclass(frozen=True)
class SweepEvent:
    x: float
    kind: Literal["add", "remove"]
    point_index: int


@dataclass(frozen=True)
class BestWindow:
    value: float
    square: Square
    achieved_at_event: int


def _point_arrays(points) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if isinstance(points, TilePoints):
        return points.x, points.y, points.weight
    if isinstance(points, tuple) and len(points) == 3:
        return tuple(np.asarray(a, dtype=np.float64) for a in points)
    pts: Sequence[WeightedPoint] = list(points)
    return (
        np.array([p.x for p in pts], dtype=np.float64),
        np.array([p.y for p in pts], dtype=np.float64),
        np.array([p.weight for p in pts], dtype=np.float64),
    )


def _y_order(xs, ys) -> np.ndarray:
    """Indices sorting points by y, ties by x, then by input position."""
    order = np.argsort(ys)
    ys_sorted = ys[order]
    tied = np.flatnonzero(ys_sorted[1:] == ys_sorted[:-1])
    if tied.size:
        # only runs of equal y need the full key; positions stay within runs
        pos = np.unique(np.concatenate((tied, tied + 1)))
        sub = order[pos]
        order[pos] = sub[np.lexsort((sub, xs[sub], ys[sub]))]
    return order


def _sigma(xs, ys, ws, length):
    """Sort points into rows and find the row block each point belongs to."""
    order = _y_order(xs, ys)
    xs, ys, ws = xs[order], ys[order], ws[order]
    row_lo, row_hi = _row_blocks(ys, length)
    return xs, ys, ws, row_lo, row_hi


@njit(cache=True)
def _row_blocks(ys, length):
    """For sorted ``ys``, rows ``k`` with ``ys[k] <= ys[i] <= ys[k] + length``.

    Two monotone pointers; same comparisons as ``Square.contains``.
    """
    m = len(ys)
    row_lo = np.empty(m, np.int64)
    row_hi = np.empty(m, np.int64)
    lo = 0
    hi = 0
    for i in range(m):
        while ys[lo] + length < ys[i]:
            lo += 1
        if hi < i:
            hi = i
        while hi + 1 < m and ys[hi + 1] <= ys[i]:
            hi += 1
        row_lo[i] = lo
        row_hi[i] = hi
    return row_lo, row_hi


@njit(cache=True)
def _sweep(xs, ws, row_lo, row_hi, length):
    """Sweep over points given in ascending x order."""
    m = len(xs)
    vals, node, size = _new_tree(m)
    best_value = -np.inf
    best_row = -1
    best_left = 0.0
    best_event = -1
    entered = 0
    left_out = 0
    events = 0
    for c in range(m):
        left = xs[c]
        if c > 0 and left == xs[c - 1]:
            continue
        right = left + length
        while entered < m and xs[entered] <= right:
            ahead = entered + PREFETCH_AHEAD
            if ahead < m:
                _prefetch_op(vals, node, size, row_lo[ahead], row_hi[ahead])
            _range_add(vals, node, size, row_lo[entered], row_hi[entered], ws[entered])
            entered += 1
            events += 1
        while xs[left_out] < left:
            ahead = left_out + PREFETCH_AHEAD
            if ahead < m:
                _prefetch_op(vals, node, size, row_lo[ahead], row_hi[ahead])
            _range_add(vals, node, size, row_lo[left_out], row_hi[left_out], -ws[left_out])
            left_out += 1
            events += 1
        top = _max_value(node)
        if top > best_value:
            best_value = top
            best_row = _argmax(vals, node, size)
            best_left = left
            best_event = events - 1
    return best_value, best_row, best_left, best_event


def _check_inputs(xs, ws, length) -> None:
    if len(xs) == 0:
        raise ValueError("point list is empty")
    if not length > 0:
        raise ValueError(f"window side must be positive, got {length!r}")
    if (ws < 0).any():
        raise ValueError("point weights must be non-negative")


def max_point_weight_square(points, length: float) -> BestWindow:
    """Closed square of side ``length`` maximising the contained point weight.

    ``points`` is a :class:`TilePoints`, a sequence of :class:`WeightedPoint`
    or an ``(xs, ys, weights)`` tuple.  Ties go to the leftmost window, then
    the lowest one.
    """
    xs, ys, ws = _point_arrays(points)
    length = float(length)
    _check_inputs(xs, ws, length)
    xs, ys, ws, row_lo, row_hi = _sigma(xs, ys, ws, length)
    by_x = np.argsort(xs)
    value, row, left, event = _sweep(xs[by_x], ws[by_x], row_lo[by_x], row_hi[by_x], length)
    return BestWindow(
        value=float(value),
        square=Square(float(left), float(ys[row]), length),
        achieved_at_event=int(event),
    )


def sweep_events(points, length: float) -> list[SweepEvent]:
    """Events in processing order, positioned by the right sweep line.

    ``point_index`` refers to the y-sorted order.  An add fires when the
    right line reaches ``p.x``; a remove when it reaches ``p.x + length``.
    Adds precede removes at equal coordinates.
    """
    xs, ys, ws = _point_arrays(points)
    length = float(length)
    _check_inputs(xs, ws, length)
    xs, _, _, _, _ = _sigma(xs, ys, ws, length)
    events = [SweepEvent(float(x), "add", i) for i, x in enumerate(xs)]
    events += [SweepEvent(float(x + length), "remove", i) for i, x in enumerate(xs)]
    events.sort(key=lambda e: (e.x, e.kind != "add", e.point_index))
    return events
