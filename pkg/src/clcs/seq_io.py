"""Sequence input, JSON result output and DOT rendering of DP trees.

Symbols are bytes at this boundary: text is encoded as UTF-8 before
parsing and multi-byte characters are matched byte by byte.
"""

import json
from dataclasses import dataclass
from typing import Optional, Union

from .grid_dp import Direction, DpTable, tree_path

DOT_MAX_NODES = 10_000

Text = Union[str, bytes]


class ParseError(ValueError):
    pass


@dataclass
class NamedSeq:
    id: str
    seq: bytes


def _as_bytes(text: Text) -> bytes:
    return text.encode("utf-8") if isinstance(text, str) else bytes(text)


def _lines(text: Text) -> list[bytes]:
    # splitlines would also break on \x0b, \x1c etc., which are legal symbols here
    data = _as_bytes(text).replace(b"\r\n", b"\n")
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    return lines


def parse_plain(text: Text) -> list[bytes]:
    """One sequence per nonempty line, surrounding whitespace stripped."""
    return [s for s in (line.strip() for line in _lines(text)) if s]


def parse_fasta(text: Text) -> list[NamedSeq]:
    records: list[NamedSeq] = []
    body: list[bytes] = []
    for lineno, line in enumerate(_lines(text), start=1):
        if line.startswith(b">"):
            if records:
                records[-1].seq = b"".join(body)
            header = line[1:].split(None, 1)
            name = header[0].decode("utf-8", "replace") if header else ""
            records.append(NamedSeq(name, b""))
            body = []
        elif not records:
            if line.strip():
                raise ParseError(f"line {lineno}: sequence data before any '>' header")
        else:
            body.append(b"".join(line.split()))
    if records:
        records[-1].seq = b"".join(body)
    return records


def format_fasta(records: list[NamedSeq], width: int = 70) -> bytes:
    out = []
    for rec in records:
        out.append(b">" + rec.id.encode("utf-8"))
        for k in range(0, len(rec.seq), width):
            out.append(rec.seq[k:k + width])
    return b"".join(line + b"\n" for line in out)


def symbols_to_text(seq) -> str:
    if isinstance(seq, str):
        return seq
    if isinstance(seq, (bytes, bytearray)):
        return bytes(seq).decode("utf-8", "backslashreplace")
    return "".join(str(s) for s in seq)


def result_to_json(r) -> str:
    obj = {
        "length": int(r.length),
        "cut_a": int(r.cut_a),
        "cut_b": int(r.cut_b),
        "subsequence": symbols_to_text(r.subsequence),
        "swapped": bool(r.swapped),
    }
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _node(i, j):
    return f'"{i},{j}"'


def tree_to_dot(table: DpTable, highlight_end_row: Optional[int] = None) -> str:
    """Render the live part of the parent tree as a Graphviz digraph.

    Edges run parent -> child.  When ``highlight_end_row`` is given, the
    tree path from the root to ``(highlight_end_row, cols)`` is drawn bold
    red.
    """
    top = table.root_row
    n_nodes = (table.rows - top + 1) * (table.cols + 1)
    if n_nodes > DOT_MAX_NODES:
        raise ValueError(f"refusing to render {n_nodes} nodes (limit {DOT_MAX_NODES})")

    on_path = set()
    if highlight_end_row is not None:
        path = tree_path(table, highlight_end_row, table.cols)
        on_path = set(zip(path, path[1:]))

    lines = [
        "digraph lspt {",
        "  node [shape=box, fontname=monospace];",
    ]
    for i in range(top, table.rows + 1):
        for j in range(table.cols + 1):
            label = f"({i},{j}):{int(table.lengths[i, j])}"
            lines.append(f'  {_node(i, j)} [label="{label}", pos="{j},{-i}!"];')
    for i in range(top, table.rows + 1):
        for j in range(table.cols + 1):
            d = table.parent[i, j]
            if d == Direction.LEFT:
                p = (i, j - 1)
            elif d == Direction.DIAG:
                p = (i - 1, j - 1)
            elif d == Direction.UP:
                p = (i - 1, j)
            else:
                continue
            attrs = ' [color=red, penwidth=2]' if (p, (i, j)) in on_path else ""
            lines.append(f"  {_node(*p)} -> {_node(i, j)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
