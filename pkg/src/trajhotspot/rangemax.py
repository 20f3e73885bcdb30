"""Array of accumulators with interval add and global max/argmax.

Accumulators live in ``vals``, grouped into blocks of ``LEAF_BLOCK``
consecutive entries.  An implicit binary tree sits over the blocks: node
``i`` keeps ``pending``, an addition applied to its whole subtree, and
``best``, the subtree maximum including its own ``pending`` but excluding
additions stored at its ancestors.  An interval add touches the ``O(log m)``
canonical nodes that cover its whole blocks, edits the (at most two) partial
blocks in place, then refreshes the two boundary paths, stopping early above
their meeting point once a maximum no longer changes.  Nothing is ever
pushed down.  Padding entries hold ``-inf`` and never win the max.

Node ``i`` is stored as ``node[2i] = best``, ``node[2i+1] = pending`` so a
sibling pair shares one cache line; blocking keeps the tree small.  Both
matter once ``m`` reaches millions.  The kernels are compiled with numba and
shared with the sweep loop.
"""

from __future__ import annotations

import numpy as np
from llvmlite import ir
from numba import njit
from numba.core import cgutils, types
from numba.extending import intrinsic

LEAF_BLOCK = 64


@intrinsic
def _prefetch(typingctx, arr, idx):
    """Hint the cache line holding ``arr[idx]`` for writing."""

    def codegen(context, builder, sig, args):
        aryty = sig.args[0]
        ary = context.make_array(aryty)(context, builder, args[0])
        ptr = cgutils.get_item_pointer(context, builder, aryty, ary, [args[1]], wraparound=False)
        i8p = ir.IntType(8).as_pointer()
        i32 = ir.IntType(32)
        fnty = ir.FunctionType(ir.VoidType(), [i8p, i32, i32, i32])
        fn = cgutils.get_or_insert_function(builder.module, fnty, "llvm.prefetch.p0i8")
        builder.call(fn, [builder.bitcast(ptr, i8p), i32(1), i32(3), i32(1)])
        return context.get_dummy_value()

    return types.void(arr, types.intp), codegen


@njit(cache=True)
def _new_tree(m):
    nblocks = (m + LEAF_BLOCK - 1) // LEAF_BLOCK
    size = 1
    while size < nblocks:
        size *= 2
    vals = np.zeros(size * LEAF_BLOCK)
    vals[m:] = -np.inf
    node = np.zeros(4 * size)
    for b in range(size):
        if b * LEAF_BLOCK >= m:
            node[2 * (size + b)] = -np.inf
    for i in range(size - 1, 0, -1):
        a = node[4 * i]
        c = node[4 * i + 2]
        node[2 * i] = a if a >= c else c
    return vals, node, size


@njit(cache=True, inline="always")
def _pull(node, i):
    a = node[4 * i]
    b = node[4 * i + 2]
    node[2 * i] = (a if a >= b else b) + node[2 * i + 1]


@njit(cache=True, inline="always")
def _bump(node, i, delta):
    node[2 * i] += delta
    node[2 * i + 1] += delta


@njit(cache=True, inline="always")
def _refresh(node, left, right):
    # both paths start at the same depth; up to their meeting point a node
    # may be or sit next to a bumped canonical node, strictly above it none
    # does, so the climb can stop at the first unchanged maximum there
    while left != right:
        _pull(node, left)
        _pull(node, right)
        left >>= 1
        right >>= 1
    if left >= 1:
        _pull(node, left)
        left >>= 1
    while left >= 1:
        old = node[2 * left]
        _pull(node, left)
        if node[2 * left] == old:
            break
        left >>= 1


@njit(cache=True, inline="always")
def _add_within_block(vals, node, size, lo, hi, delta):
    for k in range(lo, hi + 1):
        vals[k] += delta
    b = lo // LEAF_BLOCK
    top = vals[b * LEAF_BLOCK]
    for k in range(b * LEAF_BLOCK + 1, (b + 1) * LEAF_BLOCK):
        if vals[k] > top:
            top = vals[k]
    leaf = size + b
    node[2 * leaf] = top + node[2 * leaf + 1]


@njit(cache=True)
def _range_add(vals, node, size, lo, hi, delta):
    first = lo // LEAF_BLOCK
    last = hi // LEAF_BLOCK
    if first == last:
        _add_within_block(vals, node, size, lo, hi, delta)
    else:
        left = first
        right = last
        if lo != first * LEAF_BLOCK:
            _add_within_block(vals, node, size, lo, (first + 1) * LEAF_BLOCK - 1, delta)
            left += 1
        if hi != (last + 1) * LEAF_BLOCK - 1:
            _add_within_block(vals, node, size, last * LEAF_BLOCK, hi, delta)
            right -= 1
        left += size
        right += size + 1
        while left < right:
            if left & 1:
                _bump(node, left, delta)
                left += 1
            if right & 1:
                right -= 1
                _bump(node, right, delta)
            left >>= 1
            right >>= 1
    _refresh(node, (first + size) >> 1, (last + size) >> 1)


@njit(cache=True, inline="always")
def _prefetch_op(vals, node, size, lo, hi):
    """Warm the lines a coming ``_range_add(lo, hi)`` touches first."""
    first = lo - lo % LEAF_BLOCK
    last = hi - hi % LEAF_BLOCK
    for k in range(0, LEAF_BLOCK, 8):
        _prefetch(vals, first + k)
        _prefetch(vals, last + k)
    _prefetch(node, 2 * (lo // LEAF_BLOCK + size))
    _prefetch(node, 2 * (hi // LEAF_BLOCK + size))


@njit(cache=True, inline="always")
def _max_value(node):
    return node[2]


@njit(cache=True)
def _argmax(vals, node, size):
    # left child wins ties, giving the smallest maximising index
    i = 1
    while i < size:
        i = 2 * i if node[4 * i] >= node[4 * i + 2] else 2 * i + 1
    start = (i - size) * LEAF_BLOCK
    k = start
    for j in range(start + 1, start + LEAF_BLOCK):
        if vals[j] > vals[k]:
            k = j
    return k


@njit(cache=True)
def _entry(vals, node, size, k):
    i = k // LEAF_BLOCK + size
    total = vals[k]
    while i >= 1:
        total += node[2 * i + 1]
        i >>= 1
    return total


@njit(cache=True)
def _range_add_many(vals, node, size, lo, hi, delta):
    for q in range(len(lo)):
        _range_add(vals, node, size, lo[q], hi[q], delta[q])


@njit(cache=True)
def _materialize(vals, node, size, m):
    acc = node[1::2].copy()
    for i in range(2, 2 * size):
        acc[i] += acc[i >> 1]
    out = vals[:m].copy()
    for k in range(m):
        out[k] += acc[k // LEAF_BLOCK + size]
    return out


class RangeAddMaxIndex:
    """``m`` real accumulators, initially zero.

    >>> idx = RangeAddMaxIndex(3)
    >>> idx.range_add(0, 2, 5.0); idx.range_add(1, 1, -2.0)
    >>> idx.max_entry()
    (5.0, 0)
    """

    def __init__(self, m: int):
        m = int(m)
        if m < 1:
            raise ValueError("RangeAddMaxIndex needs at least one entry")
        self.m = m
        self._vals, self._node, self._size = _new_tree(m)

    def __len__(self) -> int:
        return self.m

    def _check(self, lo: int, hi: int) -> None:
        if not 0 <= lo <= hi < self.m:
            raise IndexError(f"invalid interval [{lo}, {hi}] for size {self.m}")

    def range_add(self, lo: int, hi: int, delta: float) -> None:
        """Add ``delta`` to every entry with index in ``[lo, hi]``."""
        lo, hi = int(lo), int(hi)
        self._check(lo, hi)
        _range_add(self._vals, self._node, self._size, lo, hi, float(delta))

    def range_add_batch(self, lo, hi, delta) -> None:
        """Apply many interval additions in order."""
        lo = np.ascontiguousarray(lo, dtype=np.int64)
        hi = np.ascontiguousarray(hi, dtype=np.int64)
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ValueError("lo and hi must be 1-d arrays of the same length")
        delta = np.ascontiguousarray(np.broadcast_to(np.asarray(delta, dtype=np.float64), lo.shape))
        if lo.size and ((lo < 0).any() or (hi >= self.m).any() or (lo > hi).any()):
            raise IndexError("batch contains an invalid interval")
        _range_add_many(self._vals, self._node, self._size, lo, hi, delta)

    def max_entry(self) -> tuple[float, int]:
        """Maximum entry and the smallest index attaining it."""
        return float(self._node[2]), int(_argmax(self._vals, self._node, self._size))

    def entry(self, i: int) -> float:
        if not 0 <= i < self.m:
            raise IndexError(f"index {i} out of range for size {self.m}")
        return float(_entry(self._vals, self._node, self._size, int(i)))

    def to_array(self) -> np.ndarray:
        return _materialize(self._vals, self._node, self._size, self.m)


def build(m: int) -> RangeAddMaxIndex:
    return RangeAddMaxIndex(m)
