"""Command line entry point: ``clcs {solve,check,bench,viz}``."""

import argparse
import itertools
import json
import os
import random
import statistics
import sys
import time

from . import cyclic_solver
from .cyclic_solver import cut, double, re_root
from .grid_dp import lcs_fill
from .oracle import clcs_all_cuts, clcs_row_cuts, is_subsequence
from .seq_io import ParseError, parse_fasta, parse_plain, result_to_json, symbols_to_text, tree_to_dot

DEFAULT_SEED = 1729
PRNG_NAME = "MT19937"  # random.Random
BENCH_ALPHABET = b"ACGT"


class UsageError(Exception):
    pass


def _read_source(inline, path, fasta):
    if inline is not None:
        return inline.encode("utf-8")
    with open(path, "rb") as fh:
        data = fh.read()
    if fasta:
        recs = parse_fasta(data)
        if not recs:
            raise UsageError(f"{path}: no FASTA records")
        return recs[0].seq
    seqs = parse_plain(data)
    return seqs[0] if seqs else b""


def _seed(args):
    env = os.environ.get("CLCS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"CLCS_SEED must be an integer, got {env!r}")
    return args.seed


def _add_inputs(p):
    for name in ("a", "b"):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument(f"--{name}", help=f"sequence {name.upper()} given inline")
        g.add_argument(f"--{name}-file", metavar="PATH", help=f"read sequence {name.upper()} from a file")
    p.add_argument("--fasta", action="store_true", help="parse input files as FASTA (first record)")


def build_parser():
    parser = argparse.ArgumentParser(prog="clcs", description="Cyclic longest common subsequence in O(mn).")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve", help="solve one instance")
    _add_inputs(p)
    p.add_argument("--len-only", action="store_true", help="length only (no traceback)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="compare the solvers against brute-force oracles")
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--alphabet", default="ab", help="symbols for the exhaustive sweep")
    p.add_argument("--random", type=int, default=200, metavar="N", help="random pairs after the sweep")
    p.add_argument("--random-alphabet", default="ACGT")
    p.add_argument("--random-max-len", type=int, default=64)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("bench", help="time clcs_len on random strings")
    p.add_argument("--sizes", default="256,512,1024,2048", help="comma-separated sizes")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--compare-naive", action="store_true", help="also time the m-cuts baseline")
    p.add_argument("--naive-max-size", type=int, default=512, help="skip the baseline above this size")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("viz", help="write the re-rooted tree as Graphviz DOT")
    _add_inputs(p)
    p.add_argument("--root", type=int, default=0, help="number of re-roots to apply")
    p.add_argument("--out", required=True, help="output path, '-' for stdout")
    p.add_argument("--no-highlight", action="store_true", help="do not mark the traced path")
    return parser


def cmd_solve(args, out):
    a = _read_source(args.a, args.a_file, args.fasta)
    b = _read_source(args.b, args.b_file, args.fasta)
    if args.len_only:
        n = cyclic_solver.clcs_len(a, b)
        out.write((json.dumps({"length": n}, separators=(",", ":")) if args.format == "json" else str(n)) + "\n")
        return 0
    r = cyclic_solver.clcs(a, b)
    if args.format == "json":
        out.write(result_to_json(r) + "\n")
    else:
        out.write(
            f"length: {r.length}\n"
            f"cut_a: {r.cut_a}\n"
            f"cut_b: {r.cut_b}\n"
            f"subsequence: {symbols_to_text(r.subsequence)}\n"
            f"swapped: {str(r.swapped).lower()}\n"
        )
    return 0


def check_instance(a, b):
    """Return a description of the first disagreement, or None."""
    r = cyclic_solver.clcs(a, b)
    n = cyclic_solver.clcs_len(a, b)
    short, long_ = (a, b) if len(a) <= len(b) else (b, a)
    rows = clcs_row_cuts(short, long_)
    full = clcs_all_cuts(a, b)
    if not r.length == n == rows.length == full.length:
        return f"clcs={r.length} clcs_len={n} row_cuts={rows.length} all_cuts={full.length}"
    if len(r.subsequence) != r.length:
        return "clcs subsequence length differs from reported length"
    ca, cb = cut(a, r.cut_a), cut(b, r.cut_b)
    if not (is_subsequence(r.subsequence, ca) and is_subsequence(r.subsequence, cb)):
        return f"clcs witness {r.subsequence!r} is not common to the reported cuts"
    if not (is_subsequence(rows.witness, cut(short, rows.cut_a)) and is_subsequence(rows.witness, long_)):
        return "row_cuts witness invalid"
    if not (is_subsequence(full.witness, cut(a, full.cut_a)) and is_subsequence(full.witness, cut(b, full.cut_b))):
        return "all_cuts witness invalid"
    return None


def iter_check_instances(max_m, max_n, alphabet, n_random, random_alphabet, random_max_len, seed):
    alphabet = alphabet.encode("utf-8")
    for m in range(1, max_m + 1):
        for n in range(m, max_n + 1):
            for a in itertools.product(alphabet, repeat=m):
                for b in itertools.product(alphabet, repeat=n):
                    yield bytes(a), bytes(b)
    rng = random.Random(seed)
    sym = random_alphabet.encode("utf-8")
    for _ in range(n_random):
        a = bytes(rng.choice(sym) for _ in range(rng.randint(1, random_max_len)))
        b = bytes(rng.choice(sym) for _ in range(rng.randint(1, random_max_len)))
        yield a, b


def cmd_check(args, out):
    seed = _seed(args)
    print(f"# prng={PRNG_NAME} seed={seed}", file=sys.stderr)
    count = 0
    for a, b in iter_check_instances(
        args.max_m, args.max_n, args.alphabet, args.random, args.random_alphabet, args.random_max_len, seed
    ):
        count += 1
        problem = check_instance(a, b)
        if problem:
            print(f"MISMATCH: {problem}", file=sys.stderr)
            out.write(a.decode("utf-8", "backslashreplace") + "\n")
            out.write(b.decode("utf-8", "backslashreplace") + "\n")
            return 1
    out.write(f"ok: {count} instances\n")
    return 0


def time_median(fn, reps):
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench_rows(sizes, reps=5, compare_naive=False, naive_max_size=512, seed=DEFAULT_SEED):
    """Yield ``(size, fast_ms, naive_ms_or_None)`` per size."""
    rng = random.Random(seed)
    # warm the compiled kernels outside the timed region
    cyclic_solver.clcs_len(b"AC", b"CA")
    clcs_row_cuts(b"AC", b"CA", witness=False)
    for s in sizes:
        a = bytes(rng.choice(BENCH_ALPHABET) for _ in range(s))
        b = bytes(rng.choice(BENCH_ALPHABET) for _ in range(s))
        fast = time_median(lambda: cyclic_solver.clcs_len(a, b), reps) * 1e3
        naive = None
        if compare_naive and s <= naive_max_size:
            naive = time_median(lambda: clcs_row_cuts(a, b, witness=False), reps) * 1e3
        yield s, fast, naive


def cmd_bench(args, out):
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}")
    if not sizes or min(sizes) < 1:
        raise UsageError("--sizes needs positive integers")
    seed = _seed(args)
    print(f"# prng={PRNG_NAME} seed={seed} alphabet={BENCH_ALPHABET.decode()} reps={args.reps}", file=sys.stderr)
    out.write("size,fast_ms,naive_ms,ratio\n")
    for s, fast, naive in bench_rows(sizes, args.reps, args.compare_naive, args.naive_max_size, seed):
        if naive is None:
            out.write(f"{s},{fast:.3f},,\n")
        else:
            out.write(f"{s},{fast:.3f},{naive:.3f},{naive / fast:.2f}\n")
        out.flush()
    return 0


def cmd_viz(args, out):
    a = _read_source(args.a, args.a_file, args.fasta)
    b = _read_source(args.b, args.b_file, args.fasta)
    m = len(a)
    if m == 0:
        raise UsageError("viz needs a nonempty A")
    if not 0 <= args.root < m:
        raise UsageError(f"--root must be in 0..{m - 1}")
    table = lcs_fill(double(a), b)
    for k in range(1, args.root + 1):
        re_root(table, k, m, len(b))
    try:
        dot = tree_to_dot(table, None if args.no_highlight else m + args.root)
    except ValueError as e:
        raise UsageError(str(e))
    if args.out == "-":
        out.write(dot)
    else:
        with open(args.out, "w") as fh:
            fh.write(dot)
    return 0


COMMANDS = {"solve": cmd_solve, "check": cmd_check, "bench": cmd_bench, "viz": cmd_viz}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.subcommand](args, out)
    except (UsageError, ParseError, OSError) as e:
        parser.print_usage(sys.stderr)
        print(f"clcs: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
