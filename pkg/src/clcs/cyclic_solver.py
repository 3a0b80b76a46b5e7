"""Cyclic LCS in O(mn) by re-rooting a lowest shortest path tree.

The shorter string is doubled (``AA``) and filled once against the other.
Rows ``k .. m+k`` of that table hold the grid for ``cut(A, k)``; moving the
tree root from ``(k-1, 0)`` to ``(k, 0)`` only touches the boundary between
the two subtrees left after deleting row ``k-1``, so all ``m`` candidates
cost O(mn) together.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .grid_dp import CorruptTreeError, DpTable, encode, lcs_fill, rebuild


@dataclass
class ClcsResult:
    length: int
    cut_a: int
    cut_b: int
    subsequence: Sequence
    swapped: bool = False


@dataclass
class ReRootReport:
    """What one re-rooting pass changed.

    ``changed`` lists the boundary nodes whose parent became Left, in walk
    order.  ``far_edge_row`` is the lowest row at which subtree R still
    occupies the last column (R always contains the whole new root row to
    the right of its own root, so its far-column rows run from the root row
    down to here).  Both are empty when no R exists.
    """

    r_exists: bool
    changed: list = field(default_factory=list)
    far_edge_row: Optional[int] = None


def cut(s: Sequence, k: int) -> Sequence:
    """Rotate ``s`` to start at index ``k mod len(s)``."""
    if len(s) == 0:
        return s[:0]
    k %= len(s)
    if isinstance(s, np.ndarray):
        return np.concatenate((s[k:], s[:k]))
    return s[k:] + s[:k]


def double(a: Sequence) -> Sequence:
    return a + a


def re_root(table: DpTable, root: int, m: int, n: int) -> ReRootReport:
    """Move the tree root of a doubled-string table from ``(root-1, 0)`` to ``(root, 0)``.

    Mutates ``table.parent`` in place.  Length entries are left untouched.
    """
    if table.root_row != root - 1:
        raise ValueError(f"table is rooted at row {table.root_row}, cannot re-root to {root}")
    if table.rows != 2 * m or table.cols != n:
        raise ValueError(f"table shape {table.rows}x{table.cols} does not match m={m}, n={n}")
    changed = np.empty((2 * m + n + 2, 2), dtype=np.int64)
    count, last_row = _kernels.re_root(table.parent, root, 2 * m, n, changed)
    table.root_row = root
    if count < 0:
        return ReRootReport(False)
    nodes = [(int(i), int(j)) for i, j in changed[:count]]
    return ReRootReport(True, nodes, int(last_row))


def _normalize(a, b):
    if len(a) > len(b):
        return b, a, True
    return a, b, False


def clcs(a: Sequence, b: Sequence) -> ClcsResult:
    """Cyclic longest common subsequence of ``a`` and ``b`` with its cut.

    The shorter input is the one rotated; ties between cuts keep the
    smallest cut index.
    """
    short, long_, swapped = _normalize(a, b)
    m, n = len(short), len(long_)
    if m == 0:
        return ClcsResult(0, 0, 0, rebuild(short, []), swapped)
    aa = double(short)
    caa, cb = encode(aa, long_)
    parent = np.empty((2 * m + 1, n + 1), dtype=np.int8)
    best = np.empty(m + 1, dtype=np.int64)
    k, count = _kernels.clcs_full(caa, cb, m, parent, best)
    if count < 0:
        raise CorruptTreeError("re-rooted tree lost its root during traceback")
    sub = rebuild(short, [aa[t] for t in best[:count]])
    if swapped:
        return ClcsResult(int(count), 0, int(k), sub, True)
    return ClcsResult(int(count), int(k), 0, sub, False)


def clcs_len(a: Sequence, b: Sequence) -> int:
    """Length of a cyclic LCS, reading candidates off the far column."""
    short, long_, _ = _normalize(a, b)
    m, n = len(short), len(long_)
    if m == 0:
        return 0
    caa, cb = encode(double(short), long_)
    parent = np.empty((2 * m + 1, n + 1), dtype=np.int8)
    far = np.empty(2 * m + 1, dtype=np.int32)
    _, best = _kernels.clcs_length_only(caa, cb, m, parent, far)
    return int(best)


def rooted_tables(a: Sequence, b: Sequence):
    """Yield the doubled-string table after each re-root, with its report.

    The first item is the fresh fill (report ``None``).  The same table
    object is mutated and yielded each time; copy it to keep a snapshot.
    """
    m, n = len(a), len(b)
    table = lcs_fill(double(a), b)
    yield table, None
    for k in range(1, m):
        yield table, re_root(table, k, m, n)
