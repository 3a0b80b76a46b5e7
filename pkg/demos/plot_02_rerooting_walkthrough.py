"""
Re-rooting the lowest shortest path tree
========================================

The solver fills one table for ``A + A`` against ``B``.  Rows ``k .. m+k``
are the grid for the ``k``-th rotation of ``A``.  This script shows the parent
arrows before and after one re-root and checks the result against a fresh
fill of the shorter grid.
"""

import numpy as np

from clcs import lcs_fill, re_root, trace_path

A, B = "abc", "cabb"
m, n = len(A), len(B)
AA = A + A

table = lcs_fill(AA, B)
print("rooted at (0,0):")
print(table.render())
print("rotation 0 ->", trace_path(table, m, AA))

###############################################################################
# Deleting row 0 leaves the subtree hanging off ``(1,0)`` and at most one
# more subtree entered by a diagonal from row 0.  The re-root walk turns
# the boundary of that second subtree into left arrows.  Only arrows change;
# the printed lengths are the old ones.
report = re_root(table, 1, m, n)
print("\nsubtree R found:", report.r_exists)
print("rewritten nodes:", report.changed)
print("far column rows losing one unit: 1 ..", report.far_edge_row)
print(table.render())
print("rotation 1 ->", trace_path(table, m + 1, AA))

###############################################################################
# The repaired tree is exactly what a fresh fill of ``AA[1:]`` produces.
fresh = lcs_fill(AA[1:], B)
print("\nmatches fresh fill:", np.array_equal(table.parent[1:], fresh.parent))
