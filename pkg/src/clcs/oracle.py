"""Brute-force references for checking the fast solvers.

These are intentionally shaped differently from ``grid_dp``: a textbook
table fill with its own traceback, a memoized recursion, and explicit
loops over cuts.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import _kernels
from .cyclic_solver import cut
from .grid_dp import encode, lcs_fill, rebuild

# Per-axis limit for clcs_all_cuts; m**2 * n**2 cells above this gets slow.
ALL_CUTS_MAX = 256


@dataclass
class OracleAnswer:
    length: int
    witness: Sequence
    cut_a: int = 0
    cut_b: int = 0


def is_subsequence(s: Sequence, t: Sequence) -> bool:
    it = iter(t)
    return all(any(x == y for y in it) for x in s)


def naive_lcs(a: Sequence, b: Sequence) -> OracleAnswer:
    m, n = len(a), len(b)
    dp = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if a[i - 1] == b[j - 1]:
                dp[i][j] = dp[i - 1][j - 1] + 1
            else:
                dp[i][j] = max(dp[i - 1][j], dp[i][j - 1])
    out = []
    i, j = m, n
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            out.append(a[i - 1])
            i -= 1
            j -= 1
        elif dp[i - 1][j] >= dp[i][j - 1]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return OracleAnswer(dp[m][n], rebuild(a, out))


def memo_lcs_length(a: Sequence, b: Sequence) -> int:
    """LCS length by top-down recursion; small inputs only."""

    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(a) or j == len(b):
            return 0
        if a[i] == b[j]:
            return 1 + go(i + 1, j + 1)
        return max(go(i + 1, j), go(i, j + 1))

    return go(0, 0)


def lcs_length(a: Sequence, b: Sequence) -> int:
    """Compiled two-row LCS length, for oracle sweeps and benchmarks."""
    ca, cb = encode(a, b)
    return int(_kernels.lcs_length(ca, cb))


def clcs_row_cuts(a: Sequence, b: Sequence, witness: bool = True) -> OracleAnswer:
    """Best LCS over the ``m`` rotations of ``a`` against ``b`` unrotated.

    With ``witness=False`` only the length is computed (compiled path) and
    the returned witness is empty.
    """
    if len(a) > len(b):
        raise ValueError(f"clcs_row_cuts needs len(a) <= len(b), got {len(a)} > {len(b)}")
    if not witness:
        ca, cb = encode(a, b)
        best, best_k = 0, 0
        for k in range(len(a)):
            v = int(_kernels.lcs_length(cut(ca, k), cb))
            if v > best:
                best, best_k = v, k
        return OracleAnswer(best, rebuild(a, []), best_k, 0)
    best = OracleAnswer(0, rebuild(a, []))
    for k in range(len(a)):
        ans = naive_lcs(cut(a, k), b)
        if ans.length > best.length:
            best = OracleAnswer(ans.length, ans.witness, k, 0)
    return best


def clcs_all_cuts(a: Sequence, b: Sequence, max_len: int = ALL_CUTS_MAX) -> OracleAnswer:
    """Best LCS over every pair of rotations of ``a`` and ``b``."""
    if len(a) > max_len or len(b) > max_len:
        raise ValueError(f"clcs_all_cuts limited to lengths <= {max_len}")
    ca, cb = encode(a, b)
    best, bi, bj = 0, 0, 0
    for i in range(max(len(a), 1)):
        ra = cut(ca, i)
        for j in range(max(len(b), 1)):
            v = int(_kernels.lcs_length(ra, cut(cb, j)))
            if v > best:
                best, bi, bj = v, i, j
    ans = naive_lcs(cut(a, bi), cut(b, bj))
    return OracleAnswer(ans.length, ans.witness, bi, bj)


def reference_reroot_tree(aa: Sequence, b: Sequence, root: int):
    """Fresh lowest-tree fill of ``aa[root:]`` against ``b``.

    Row ``r`` of the result corresponds to row ``root + r`` of the doubled
    table after ``root`` re-roots.
    """
    if not 0 <= root <= len(aa) // 2:
        raise ValueError(f"root {root} outside 0..{len(aa) // 2}")
    return lcs_fill(aa[root:], b)
