import itertools

import numpy as np
import pytest

from clcs.grid_dp import Direction


def words(alphabet, lo, hi):
    for n in range(lo, hi + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def pairs(alphabet, max_m, max_n, min_m=1):
    """All (a, b) with min_m <= len(a) <= max_m and len(a) <= len(b) <= max_n."""
    for a in words(alphabet, min_m, max_m):
        for b in words(alphabet, len(a), max_n):
            yield a, b


def random_word(rng, alphabet, lo, hi):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))


def row_deltas_ok(lengths):
    """Adjacent entries differ by 0 or 1 along rows and along columns."""
    dj = np.diff(lengths.astype(np.int64), axis=1)
    di = np.diff(lengths.astype(np.int64), axis=0)
    return bool(((dj >= 0) & (dj <= 1)).all() and ((di >= 0) & (di <= 1)).all())


def parent_of(table, i, j):
    d = table.parent[i, j]
    if d == Direction.LEFT:
        return i, j - 1
    if d == Direction.DIAG:
        return i - 1, j - 1
    if d == Direction.UP:
        return i - 1, j
    return None


@pytest.fixture
def rng():
    import random

    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report(mod.RESULTS):
        terminalreporter.write_line(line)
