"""
Scaling: O(mn) against m separate LCS runs
==========================================

Doubling both string lengths should roughly quadruple the time of
``clcs_len``.  The baseline that solves one LCS per rotation of ``A`` costs
a factor of ``m`` more.  Same timing helper as ``clcs bench``.
"""

from clcs.cli import bench_rows

print("size  fast_ms  naive_ms  ratio")
prev = None
for size, fast, naive in bench_rows([128, 256, 512, 1024], reps=3, compare_naive=True, naive_max_size=512):
    growth = f"  (x{fast / prev:.1f} vs previous size)" if prev else ""
    naive_txt = f"{naive:9.1f} {naive / fast:6.0f}" if naive is not None else "        -      -"
    print(f"{size:4d} {fast:8.2f} {naive_txt}{growth}")
    prev = fast
