"""
Comparing circular sequences from FASTA
=======================================

Plasmids are circular, so the position where a sequencing file starts is
arbitrary.  Two FASTA records of the same plasmid started at different
origins still share a long cyclic LCS.
"""

import random

from clcs import clcs, naive_lcs, parse_fasta, result_to_json
from clcs.cyclic_solver import cut

rng = random.Random(7)
plasmid = bytes(rng.choice(b"ACGT") for _ in range(300))

###############################################################################
# Same molecule, different origin, plus a few point mutations.
shifted = bytearray(cut(plasmid, 117))
for pos in rng.sample(range(len(shifted)), 6):
    shifted[pos] = rng.choice(b"ACGT")

fasta = b">pA origin 0\n" + plasmid + b"\n>pA_reseq origin 117\n" + bytes(shifted) + b"\n"
recs = parse_fasta(fasta)
for rec in recs:
    print(rec.id, len(rec.seq))

###############################################################################
# Linear LCS is penalized by the origin shift; cyclic LCS is not.
x, y = recs[0].seq, recs[1].seq
print("linear LCS:", naive_lcs(x, y).length)
r = clcs(x, y)
print("cyclic LCS:", r.length, "at cut", r.cut_a)
print(result_to_json(r)[:120], "...")
