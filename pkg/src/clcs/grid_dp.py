"""LCS dynamic program viewed as a grid graph.

The table for ``aa`` (rows) against ``b`` (columns) is an implicit DAG:
node ``(i, j)`` per entry, edges pointing down, right and, where the
symbols match, diagonally.  ``lcs_fill`` records one parent per node using
the tiebreak Left, then Diag, then Up, which makes the parent pointers a
lowest shortest path tree rooted at ``(0, 0)``.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Hashable, Sequence

import numpy as np

from . import _kernels


class Direction(IntEnum):
    ROOT = _kernels.ROOT
    LEFT = _kernels.LEFT
    DIAG = _kernels.DIAG
    UP = _kernels.UP

    @property
    def arrow(self):
        return {0: "*", 1: "←", 2: "↖", 3: "↑"}[int(self)]


class CorruptTreeError(RuntimeError):
    """Parent pointers do not lead back to the current root."""


@dataclass
class DpTable:
    """Length and parent grids of shape ``(rows + 1, cols + 1)``.

    ``root_row`` is the row of the current tree root ``(root_row, 0)``.
    Rows above it are stale once the table has been re-rooted.
    """

    lengths: np.ndarray
    parent: np.ndarray
    root_row: int = 0

    @property
    def rows(self) -> int:
        return self.lengths.shape[0] - 1

    @property
    def cols(self) -> int:
        return self.lengths.shape[1] - 1

    def copy(self) -> "DpTable":
        return DpTable(self.lengths.copy(), self.parent.copy(), self.root_row)

    def direction(self, i: int, j: int) -> Direction:
        return Direction(int(self.parent[i, j]))

    def render(self) -> str:
        """Arrow grid of the live region, one text line per row."""
        lines = []
        for i in range(self.root_row, self.rows + 1):
            cells = (
                f"{self.direction(i, j).arrow}{int(self.lengths[i, j])}"
                for j in range(self.cols + 1)
            )
            lines.append(" ".join(cells))
        return "\n".join(lines)


def encode(*seqs: Sequence[Hashable]) -> list[np.ndarray]:
    """Map symbols to shared integer codes so equality is preserved."""
    codes: dict = {}
    out = []
    for seq in seqs:
        arr = np.empty(len(seq), dtype=np.int64)
        for k, sym in enumerate(seq):
            arr[k] = codes.setdefault(sym, len(codes))
        out.append(arr)
    return out


def rebuild(like: Sequence, items: list) -> Sequence:
    """Return ``items`` as the same kind of sequence as ``like``."""
    if isinstance(like, str):
        return "".join(items)
    if isinstance(like, (bytes, bytearray)):
        return bytes(items)
    if isinstance(like, tuple):
        return tuple(items)
    return list(items)


def new_table(rows: int, cols: int) -> DpTable:
    return DpTable(
        np.zeros((rows + 1, cols + 1), dtype=np.int32),
        np.zeros((rows + 1, cols + 1), dtype=np.int8),
    )


def lcs_fill(aa: Sequence, b: Sequence) -> DpTable:
    """Fill the LCS table of ``aa`` against ``b`` with the lowest-tree tiebreak.

    Row 0 points Left, column 0 points Up and ``(0, 0)`` is the root.  Either
    sequence may be empty.
    """
    ca, cb = encode(aa, b)
    table = new_table(len(ca), len(cb))
    _kernels.fill(ca, cb, table.lengths, table.parent)
    return table


def trace_path(table: DpTable, end_row: int, aa: Sequence, end_col: int | None = None) -> Sequence:
    """Common subsequence spelled by the tree path from ``(end_row, end_col)``.

    ``end_col`` defaults to the last column.  Symbols are read from ``aa`` at
    each diagonal step and returned in forward order, as the same sequence
    type as ``aa``.
    """
    if end_col is None:
        end_col = table.cols
    if not table.root_row <= end_row <= table.rows:
        raise ValueError(f"end_row {end_row} outside live rows {table.root_row}..{table.rows}")
    out = np.empty(min(end_row - table.root_row, end_col) + 1, dtype=np.int64)
    count = _kernels.trace(table.parent, table.root_row, end_row, end_col, out)
    if count < 0:
        raise CorruptTreeError(
            f"walk from ({end_row},{end_col}) did not reach root ({table.root_row},0)"
        )
    return rebuild(aa, [aa[k] for k in out[:count]])


def tree_path(table: DpTable, i: int, j: int) -> list[tuple[int, int]]:
    """Nodes on the tree path from the root to ``(i, j)``, root first."""
    path = [(i, j)]
    limit = (i - table.root_row) + j
    while (i, j) != (table.root_row, 0):
        if len(path) > limit + 1:
            raise CorruptTreeError(f"cycle or escape while walking to ({i},{j})")
        d = table.parent[i, j]
        if d == Direction.LEFT:
            j -= 1
        elif d == Direction.DIAG:
            i, j = i - 1, j - 1
        elif d == Direction.UP:
            i -= 1
        else:
            raise CorruptTreeError(f"stray root marker at ({i},{j})")
        if i < table.root_row:
            raise CorruptTreeError(f"walk left the live region at row {i}")
        path.append((i, j))
    path.reverse()
    return path
