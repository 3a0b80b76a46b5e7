import itertools

import numpy as np
import pytest

from clcs.grid_dp import CorruptTreeError, Direction, lcs_fill, trace_path, tree_path
from clcs.oracle import is_subsequence, memo_lcs_length

from conftest import parent_of, row_deltas_ok, words


def brute_lcs(a, b):
    """Longest common subsequence length by enumerating subsequences of a."""
    subs_b = set()
    for r in range(len(b) + 1):
        subs_b.update(itertools.combinations(b, r))
    for r in range(len(a), -1, -1):
        if any(c in subs_b for c in itertools.combinations(a, r)):
            return r
    return 0


def test_identical_strings():
    t = lcs_fill("abcd", "abcd")
    assert t.lengths[4, 4] == 4
    assert trace_path(t, 4, "abcd") == "abcd"


def test_empty_second_string():
    t = lcs_fill("abc", "")
    assert t.lengths.shape == (4, 1)
    assert t.lengths[3, 0] == 0
    assert all(t.direction(i, 0) == Direction.UP for i in range(1, 4))
    assert t.direction(0, 0) == Direction.ROOT
    assert trace_path(t, 3, "abc") == ""


def test_both_empty():
    t = lcs_fill("", "")
    assert t.lengths.shape == (1, 1)
    assert t.direction(0, 0) == Direction.ROOT


def test_left_wins_tie_with_up():
    t = lcs_fill("ab", "ba")
    assert t.lengths[1, 1] == 0
    assert t.direction(1, 1) == Direction.LEFT


def test_diag_beats_up_only_when_strictly_better():
    # (2,2): Left = 1, Diag = 1 + 1 = 2 -> Diag
    t = lcs_fill("aa", "aa")
    assert t.direction(2, 2) == Direction.DIAG
    t = lcs_fill("ab", "ab")
    assert t.direction(2, 2) == Direction.DIAG
    t = lcs_fill("ba", "ab")
    # (2,2): Left = 1, no match, Up = 1 -> Left keeps the tie
    assert t.direction(2, 2) == Direction.LEFT


def test_clrs_example_length_and_trace():
    a, b = "abcbdab", "bdcaba"
    assert brute_lcs(a, b) == 4
    t = lcs_fill(a, b)
    assert t.lengths[7, 6] == 4
    s = trace_path(t, 7, a)
    assert len(s) == 4
    assert is_subsequence(s, a) and is_subsequence(s, b)


def test_boundary_parents():
    t = lcs_fill("xyz", "xzyx")
    assert all(t.direction(0, j) == Direction.LEFT for j in range(1, 5))
    assert all(t.direction(i, 0) == Direction.UP for i in range(1, 4))
    assert (t.lengths[0, :] == 0).all() and (t.lengths[:, 0] == 0).all()


def test_symbol_types():
    assert lcs_fill(b"abc", b"cab").lengths[3, 3] == 2
    t = lcs_fill(["x", 1, None], [None, "x", 1])
    assert t.lengths[3, 3] == 2
    assert trace_path(t, 3, ["x", 1, None]) == ["x", 1]
    # case sensitive
    assert lcs_fill("A", "a").lengths[1, 1] == 0


@pytest.mark.parametrize("a", list(words("ab", 0, 6)))
def test_lengths_match_memoized_recursion(a):
    for b in words("ab", 0, 6):
        t = lcs_fill(a, b)
        for i in range(len(a) + 1):
            for j in range(len(b) + 1):
                assert t.lengths[i, j] == memo_lcs_length(a[:i], b[:j])


def test_unit_step_monotonicity_and_diag_only_on_match(rng):
    for _ in range(300):
        a = "".join(rng.choice("abc") for _ in range(rng.randint(0, 30)))
        b = "".join(rng.choice("abc") for _ in range(rng.randint(0, 30)))
        t = lcs_fill(a, b)
        assert row_deltas_ok(t.lengths)
        ii, jj = np.nonzero(t.parent == Direction.DIAG)
        assert all(a[i - 1] == b[j - 1] for i, j in zip(ii, jj))


def test_tree_shape(rng):
    for _ in range(100):
        a = "".join(rng.choice("ab") for _ in range(rng.randint(0, 12)))
        b = "".join(rng.choice("ab") for _ in range(rng.randint(0, 12)))
        t = lcs_fill(a, b)
        assert (t.parent == Direction.ROOT).sum() == 1
        for i in range(t.rows + 1):
            for j in range(t.cols + 1):
                path = tree_path(t, i, j)
                assert path[0] == (0, 0)
                assert len(set(path)) == len(path)


def test_tree_paths_are_shortest():
    """Diagonal count along each tree path equals the LCS length there."""
    for a in words("ab", 0, 5):
        for b in words("ab", 0, 5):
            t = lcs_fill(a, b)
            for i in range(len(a) + 1):
                for j in range(len(b) + 1):
                    path = tree_path(t, i, j)
                    diags = sum(1 for (p, q) in zip(path, path[1:]) if q[0] - p[0] == 1 and q[1] - p[1] == 1)
                    assert diags == t.lengths[i, j]


def _shortest_paths(a, b, ti, tj):
    """Every monotone path (0,0)->(ti,tj) with the maximum number of diagonals."""
    best = []
    best_d = -1

    def walk(i, j, path, d):
        nonlocal best, best_d
        if (i, j) == (ti, tj):
            if d > best_d:
                best, best_d = [list(path)], d
            elif d == best_d:
                best.append(list(path))
            return
        if j < tj:
            path.append((i, j + 1))
            walk(i, j + 1, path, d)
            path.pop()
        if i < ti:
            path.append((i + 1, j))
            walk(i + 1, j, path, d)
            path.pop()
        if i < ti and j < tj and a[i] == b[j]:
            path.append((i + 1, j + 1))
            walk(i + 1, j + 1, path, d + 1)
            path.pop()

    walk(0, 0, [(0, 0)], 0)
    return best


def _row_reach(path, rows):
    """Rightmost column the path occupies in each row."""
    reach = [-1] * (rows + 1)
    for i, j in path:
        reach[i] = max(reach[i], j)
    return reach


def test_tree_path_is_lowest_shortest_path():
    checked = 0
    for a in words("ab", 1, 5):
        for b in words("ab", 1, 10 - len(a)):
            t = lcs_fill(a, b)
            for i in range(len(a) + 1):
                for j in range(len(b) + 1):
                    mine = _row_reach(tree_path(t, i, j), i)
                    for other in _shortest_paths(a, b, i, j):
                        theirs = _row_reach(other, i)
                        assert all(x <= y for x, y in zip(mine, theirs)), (a, b, i, j, other)
                        checked += 1
    assert checked > 0


def test_trace_detects_corruption():
    t = lcs_fill("ab", "ab")
    t.parent[1, 1] = Direction.ROOT
    with pytest.raises(CorruptTreeError):
        trace_path(t, 2, "ab")


def test_parent_helper_consistent():
    t = lcs_fill("abab", "ba")
    for i in range(t.rows + 1):
        for j in range(t.cols + 1):
            p = parent_of(t, i, j)
            if p is not None:
                assert tree_path(t, *p) + [(i, j)] == tree_path(t, i, j)


def test_render():
    assert lcs_fill("a", "a").render() == "*0 ←0\n↑0 ↖1"
