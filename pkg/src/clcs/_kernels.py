"""Compiled inner loops for the grid DP, the re-rooting walk and both drivers.

All kernels work on integer-coded symbol arrays and mutate caller-owned
tables.  Direction codes must stay in sync with ``grid_dp.Direction``.
"""

import numpy as np
from numba import njit

ROOT = 0
LEFT = 1
DIAG = 2
UP = 3


@njit(cache=True)
def fill(aa, b, lengths, parent):
    rows = aa.shape[0]
    cols = b.shape[0]
    lengths[0, 0] = 0
    parent[0, 0] = ROOT
    for j in range(1, cols + 1):
        lengths[0, j] = 0
        parent[0, j] = LEFT
    for i in range(1, rows + 1):
        lengths[i, 0] = 0
        parent[i, 0] = UP
        ai = aa[i - 1]
        for j in range(1, cols + 1):
            # Left, then Diag, then Up; later candidates win only when strictly better.
            best = lengths[i, j - 1]
            d = LEFT
            if ai == b[j - 1]:
                v = lengths[i - 1, j - 1] + 1
                if v > best:
                    best = v
                    d = DIAG
            v = lengths[i - 1, j]
            if v > best:
                best = v
                d = UP
            lengths[i, j] = best
            parent[i, j] = d


@njit(cache=True)
def fill_parents(aa, b, parent, far):
    """Same parents as ``fill`` but only the last column of lengths is kept."""
    rows = aa.shape[0]
    cols = b.shape[0]
    prev = np.zeros(cols + 1, dtype=np.int32)
    cur = np.zeros(cols + 1, dtype=np.int32)
    parent[0, 0] = ROOT
    for j in range(1, cols + 1):
        parent[0, j] = LEFT
    far[0] = 0
    for i in range(1, rows + 1):
        parent[i, 0] = UP
        ai = aa[i - 1]
        for j in range(1, cols + 1):
            best = cur[j - 1]
            d = LEFT
            if ai == b[j - 1]:
                v = prev[j - 1] + 1
                if v > best:
                    best = v
                    d = DIAG
            v = prev[j]
            if v > best:
                best = v
                d = UP
            cur[j] = best
            parent[i, j] = d
        far[i] = cur[cols]
        prev, cur = cur, prev
    return far


@njit(cache=True)
def re_root(parent, root, bottom, n, changed):
    """Re-root the tree at (root, 0); ``bottom`` is the last row index (2m).

    Returns ``(count, last_row)``.  ``count`` is -1 when no subtree R exists;
    otherwise the first ``count`` rows of ``changed`` hold the rewritten nodes
    and ``last_row`` is the lowest row of R in column n.
    """
    parent[root, 0] = ROOT
    i = root
    j = 1
    while j <= n and parent[i, j] != DIAG:
        j += 1
    if j > n:
        return -1, -1
    count = 0
    parent[i, j] = LEFT
    changed[count, 0] = i
    changed[count, 1] = j
    count += 1
    while i < bottom and j < n:
        if parent[i + 1, j] == UP:
            i += 1
            parent[i, j] = LEFT
            changed[count, 0] = i
            changed[count, 1] = j
            count += 1
        elif parent[i + 1, j + 1] == DIAG:
            i += 1
            j += 1
            parent[i, j] = LEFT
            changed[count, 0] = i
            changed[count, 1] = j
            count += 1
        else:
            j += 1
    while i < bottom and parent[i + 1, j] == UP:
        i += 1
        parent[i, j] = LEFT
        changed[count, 0] = i
        changed[count, 1] = j
        count += 1
    return count, i


@njit(cache=True)
def trace(parent, root_row, end_row, end_col, out):
    """Walk parent pointers back to (root_row, 0).

    Writes the aa-indices of Diag steps into ``out`` in forward order and
    returns how many there are, or -1 if the walk does not reach the root
    within the step bound.
    """
    i = end_row
    j = end_col
    count = 0
    steps = 0
    limit = (end_row - root_row) + end_col
    while not (i == root_row and j == 0):
        if steps > limit or i < root_row:
            return -1
        d = parent[i, j]
        if d == LEFT:
            j -= 1
        elif d == DIAG:
            out[count] = i - 1
            count += 1
            i -= 1
            j -= 1
        elif d == UP:
            i -= 1
        else:
            return -1
        steps += 1
    # collected backwards
    lo = 0
    hi = count - 1
    while lo < hi:
        tmp = out[lo]
        out[lo] = out[hi]
        out[hi] = tmp
        lo += 1
        hi -= 1
    return count


@njit(cache=True)
def clcs_full(aa, b, m, parent, best_out):
    """Traceback driver.  Returns ``(best_k, best_count)``; indices in ``best_out``."""
    n = b.shape[0]
    bottom = 2 * m
    fill_parents(aa, b, parent, np.empty(bottom + 1, dtype=np.int32))
    changed = np.empty((bottom + n + 2, 2), dtype=np.int64)
    buf = np.empty(min(m, n) + 1, dtype=np.int64)
    best_count = trace(parent, 0, m, n, best_out)
    best_k = 0
    for k in range(1, m):
        re_root(parent, k, bottom, n, changed)
        c = trace(parent, k, m + k, n, buf)
        if c < 0:
            return -1, -1
        if best_count < c:
            best_count = c
            best_k = k
            for t in range(c):
                best_out[t] = buf[t]
    return best_k, best_count


@njit(cache=True)
def clcs_length_only(aa, b, m, parent, far):
    """Length-only driver.  Returns ``(best_k, best_length)``.

    ``far`` receives the last column of lengths and is kept current for
    the rows still to be read.
    """
    n = b.shape[0]
    bottom = 2 * m
    fill_parents(aa, b, parent, far)
    changed = np.empty((bottom + n + 2, 2), dtype=np.int64)
    best = far[m]
    best_k = 0
    for k in range(1, m):
        count, last_row = re_root(parent, k, bottom, n, changed)
        if count > 0:
            # R meets the far column in rows k..last_row; only rows >= m+k are read again.
            lo = m + k
            for i in range(lo, last_row + 1):
                far[i] -= 1
        v = far[m + k]
        if best < v:
            best = v
            best_k = k
    return best_k, best


@njit(cache=True)
def lcs_length(a, b):
    """Plain two-row LCS length; no parent pointers, no tiebreak."""
    n = b.shape[0]
    prev = np.zeros(n + 1, dtype=np.int64)
    cur = np.zeros(n + 1, dtype=np.int64)
    for i in range(a.shape[0]):
        ai = a[i]
        for j in range(1, n + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            elif prev[j] >= cur[j - 1]:
                cur[j] = prev[j]
            else:
                cur[j] = cur[j - 1]
        for j in range(n + 1):
            prev[j] = cur[j]
    return prev[n]
