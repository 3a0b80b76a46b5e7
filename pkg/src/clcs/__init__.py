"""Cyclic longest common subsequence in O(mn) time.

>>> from clcs import clcs
>>> clcs("abc", "cab").length
3
"""

from .cyclic_solver import ClcsResult, ReRootReport, clcs, clcs_len, cut, re_root
from .grid_dp import CorruptTreeError, Direction, DpTable, lcs_fill, trace_path
from .oracle import OracleAnswer, clcs_all_cuts, clcs_row_cuts, is_subsequence, naive_lcs, reference_reroot_tree
from .seq_io import NamedSeq, ParseError, parse_fasta, parse_plain, result_to_json, tree_to_dot

__version__ = "0.1.0"

__all__ = [
    "ClcsResult",
    "CorruptTreeError",
    "Direction",
    "DpTable",
    "NamedSeq",
    "OracleAnswer",
    "ParseError",
    "ReRootReport",
    "clcs",
    "clcs_all_cuts",
    "clcs_len",
    "clcs_row_cuts",
    "cut",
    "is_subsequence",
    "lcs_fill",
    "naive_lcs",
    "parse_fasta",
    "parse_plain",
    "re_root",
    "reference_reroot_tree",
    "result_to_json",
    "trace_path",
    "tree_to_dot",
]
