from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_catalan.catalan import eta, higher_catalan
from higher_catalan.errors import SizeGuardError
from higher_catalan.lattice import (
    NU,
    ONE,
    LatticePath,
    LatticePoint,
    PolygonDissection,
    QueueArrangement,
    compose_dyck_path,
    count_paths_between,
    count_paths_touching_below,
    decompose_dyck_path,
    enumerate_dissections,
    enumerate_dyck_paths,
    enumerate_lines,
    enumerate_queue_arrangements,
    iter_all_paths,
    line_is_valid,
    merge_queues,
    path_to_queue,
    queue_to_path,
    split_queue,
)

P = LatticePoint


def test_count_paths_between_examples():
    for nu in range(2, 5):
        for j in range(1, 6):
            assert count_paths_between(P(0, 0), P(nu * j, 0), nu) == comb(nu * j, j)
    assert count_paths_between(P(0, 0), P(1, 2), 2) == 0
    assert count_paths_between(P(0, 0), P(4, 0), 2) == 6


def test_count_paths_between_by_listing():
    # every +-1 sequence of length 4 summing to 0
    listed = [s for s in iter_all_paths(2, 2) if s.heights()[-1] == 0]
    assert len(listed) == 6


def test_count_paths_between_needs_forward():
    with pytest.raises(ValueError):
        count_paths_between(P(3, 0), P(3, 0), 2)


@pytest.mark.parametrize("nu,j,expected", [(2, 2, 4), (3, 2, 12), (2, 1, 1), (3, 1, 2), (5, 1, 4)])
def test_touching_below_exhaustive(nu, j, expected):
    below = sum(1 for p in iter_all_paths(nu, j) if min(p.heights()) < 0)
    assert count_paths_touching_below(nu, j) == below == expected


def test_dyck_path_examples():
    assert [str(p) for p in enumerate_dyck_paths(2, 2)] == ["UUDD", "UDUD"]
    assert [str(p) for p in enumerate_dyck_paths(3, 2)] == ["UUUUDD", "UUUDUD", "UUDUUD"]
    for nu in range(2, 6):
        assert [p.steps for p in enumerate_dyck_paths(nu, 0)] == [()]


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_dyck_paths_match_brute_force_in_order(nu):
    for j in range(16 // nu + 1):
        brute = sorted((p for p in iter_all_paths(nu, j) if p.is_dyck()), key=lambda p: [s == "D" for s in p.steps])  # U < D
        assert enumerate_dyck_paths(nu, j) == brute
        assert len(brute) == higher_catalan(nu, j)


def test_dyck_guard():
    with pytest.raises(SizeGuardError):
        enumerate_dyck_paths(2, 13)
    assert len(enumerate_dyck_paths(2, 13, max_steps=None)) == higher_catalan(2, 13)


def test_path_queue_examples():
    q = path_to_queue(LatticePath.from_string(2, "UUDD"))
    assert q.lines == ((ONE, ONE, NU, NU),)
    assert str(q) == "11NN"
    assert path_to_queue(LatticePath(3, ())).lines == ((),)
    for p in enumerate_dyck_paths(2, 3):
        assert queue_to_path(path_to_queue(p)) == p


def test_path_queue_reject_invalid():
    with pytest.raises(ValueError):
        path_to_queue(LatticePath.from_string(2, "DU"))
    with pytest.raises(ValueError):
        queue_to_path(QueueArrangement.from_string(2, "N1"))
    with pytest.raises(ValueError):
        queue_to_path(QueueArrangement.from_string(2, "1N|1N"))


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_prefix_balance_equivalence(nu):
    for j in range(1, 12 // nu + 1):
        for p in iter_all_paths(nu, j):
            line = tuple(ONE if s == "U" else NU for s in p.steps)
            assert line_is_valid(line, nu) == p.is_dyck()


def test_merge_example():
    q = QueueArrangement.from_string(2, "1N|1N")
    merged = merge_queues(q)
    # shifting gives 111N; dropping the last N customer leaves j - i = 0 two-dollar bills
    assert merged == (ONE, ONE, ONE)
    assert split_queue(merged, 2, 2) == q


def test_merge_single_line_only_drops_last():
    for p in enumerate_dyck_paths(3, 3):
        line = path_to_queue(p).lines[0]
        assert merge_queues(QueueArrangement(3, (line,))) == line[:-1]


def test_merge_rejects_unbalanced_lines():
    with pytest.raises(ValueError):
        merge_queues(QueueArrangement.from_string(2, "11N|1N"))
    with pytest.raises(ValueError):
        merge_queues(QueueArrangement.from_string(2, "|1N"))


def test_split_rejects_wrong_till():
    with pytest.raises(ValueError):
        split_queue((ONE, ONE), 2, 2)


@pytest.mark.parametrize("nu", [2, 3])
def test_queue_counts_and_bijection(nu):
    for j in range(1, 6 if nu == 2 else 5):
        for i in range(1, min(j, 3) + 1):
            arrangements = enumerate_queue_arrangements(nu, i, j)
            assert len(arrangements) == eta(nu, i, j)
            assert all(q.nu_count == j and len(q.lines) == i for q in arrangements)
            lines = enumerate_lines(nu, (nu - 1) * j + i - 1, j - i)
            merged = [merge_queues(q) for q in arrangements]
            assert sorted(merged) == sorted(lines)
            for m, q in zip(merged, arrangements):
                assert split_queue(m, nu, i) == q
                assert m.count(NU) == j - i
                assert m.count(ONE) == (nu - 1) * j + i - 1


def test_queue_string_roundtrip():
    q = QueueArrangement.from_string(3, "11N|111N1N")
    assert str(q) == "11N|111N1N"
    assert QueueArrangement.from_string(3, str(q)) == q


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_decomposition_is_bijection(nu):
    for j in range(1, 12 // nu + 1):
        paths = enumerate_dyck_paths(nu, j)
        seen = set()
        for p in paths:
            pieces = decompose_dyck_path(p)
            assert len(pieces) == nu
            assert all(q.is_dyck() for q in pieces)
            assert sum(q.down_count for q in pieces) == j - 1
            assert compose_dyck_path(pieces) == p
            seen.add(pieces)
        # every nu-tuple of Dyck sub-paths with j-1 downs in total is hit exactly once
        smaller = [p for k in range(j) for p in enumerate_dyck_paths(nu, k)]
        tuples = {t for t in product(smaller, repeat=nu) if sum(q.down_count for q in t) == j - 1}
        assert seen == tuples
        assert len(seen) == len(paths)


def test_decompose_example():
    pieces = decompose_dyck_path(LatticePath.from_string(2, "UUDDUD"))
    assert [str(q) for q in pieces] == ["UD", "UD"]


def brute_dissections(nu, j):
    """Every non-crossing diagonal set whose faces are all (nu+1)-gons."""
    n = (nu - 1) * j + 2
    diags = [(a, b) for a, b in combinations(range(n), 2) if (b - a) % n not in (1, n - 1)]
    out = set()
    for subset in combinations(diags, j - 1):
        d = PolygonDissection(nu, j, frozenset(subset))
        if d.is_noncrossing() and all(len(f) == nu + 1 for f in d.faces()):
            out.add(d)
    return out


def test_dissection_examples():
    assert len(enumerate_dissections(2, 2)) == 2
    for nu in range(2, 7):
        assert [d.diagonals for d in enumerate_dissections(nu, 1)] == [frozenset()]
    assert len(enumerate_dissections(2, 4)) == 14


@pytest.mark.parametrize("nu,j", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (4, 3), (5, 3)])
def test_dissections_match_brute_force(nu, j):
    got = enumerate_dissections(nu, j)
    assert len(got) == len(set(got))
    assert set(got) == brute_dissections(nu, j)


@pytest.mark.parametrize("nu", [2, 3, 4])
def test_dissection_faces(nu):
    for j in range(1, 16 // nu + 1):
        ds = enumerate_dissections(nu, j)
        assert len(ds) == higher_catalan(nu, j)
        for d in ds:
            faces = d.faces()
            assert len(faces) == j
            assert all(len(f) == nu + 1 for f in faces)
            assert d.is_noncrossing()


def test_dissection_string_roundtrip():
    for d in enumerate_dissections(3, 3):
        assert PolygonDissection.from_string(3, str(d)) == d
    assert str(PolygonDissection(2, 2, frozenset({(0, 2)}))) == "4:0-2"


def test_dissection_guard():
    with pytest.raises(SizeGuardError):
        enumerate_dissections(2, 11)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4), st.data())
def test_random_path_roundtrip(nu, data):
    j = data.draw(st.integers(1, 16 // nu))
    paths = enumerate_dyck_paths(nu, j)
    p = data.draw(st.sampled_from(paths))
    assert queue_to_path(path_to_queue(p)) == p
    assert compose_dyck_path(decompose_dyck_path(p)) == p
