"""
Cyclic LCS basics
=================

Rotating one string can lengthen the longest common subsequence.  ``clcs``
finds the best rotation and ``clcs_len`` returns just its length.
"""

from clcs import clcs, clcs_len, cut, naive_lcs

###############################################################################
# A plain LCS only sees the strings as given.
a, b = "abc", "cab"
print("plain LCS:", naive_lcs(a, b).length)

###############################################################################
# Rotating ``a`` by two positions lines it up with ``b`` completely.
r = clcs(a, b)
print(r)
print("cut(a, r.cut_a) =", cut(a, r.cut_a))

###############################################################################
# The shorter input is always the one rotated.  When it is the second one,
# ``swapped`` is set and the rotation is reported in ``cut_b``.
r = clcs("ringbuffer", "buffer")
print(r)

###############################################################################
# Any sequence of hashable symbols works: bytes, tuples, lists of tokens.
print(clcs(b"GATTACA", b"ACAGATT").subsequence)
print(clcs(["N", "E", "S", "W"], ["S", "W", "N"]).subsequence)

###############################################################################
# The length-only path skips the traceback entirely.
print("length only:", clcs_len("abcdefgh", "fghabcde"))
