"""Acceptance criteria, one test each, run at their stated limits.

Every test clears the series and oracle caches before its timed block, so the
times below are cold-start times.
"""

from math import comb, factorial

from higher_catalan import verify
from higher_catalan.catalan import (
    catalan_by_recursion,
    eta,
    eta_by_convolution,
    higher_catalan,
    log_coefficient,
    psg_coefficient,
    star_lhs,
)
from higher_catalan.cli import main
from higher_catalan.gluing import count_maps_oracle
from higher_catalan.lattice import (
    enumerate_dissections,
    enumerate_dyck_paths,
    enumerate_lines,
    enumerate_queue_arrangements,
    iter_all_paths,
    merge_queues,
    path_to_queue,
    queue_to_path,
    split_queue,
)
from higher_catalan.maps import (
    e0_series,
    e1_series,
    kappa0,
    kappa0_assembled,
    kappa1,
    kappa_from_series,
    verify_psg_second,
    verify_zprime,
)
from higher_catalan.series import series_log, series_pow, solve_z

ORACLE_RANGE = verify.oracle_range()


def test_criterion_01_catalan_chain(criterion):
    with criterion(1, "Catalan chain", 10):
        for nu in range(2, 5):
            j_max = 16 // nu
            z = solve_z(nu, j_max)
            rec = catalan_by_recursion(nu, j_max)
            for j in range(1, j_max + 1):
                want = comb(nu * j, j - 1) // j
                assert higher_catalan(nu, j) == want
                assert len(enumerate_dyck_paths(nu, j)) == want
                assert sum(1 for p in iter_all_paths(nu, j) if p.is_dyck()) == want
                assert len(enumerate_dissections(nu, j)) == want
                assert z[j] == want
                assert rec[j] == want


def test_criterion_02_reflection(criterion):
    with criterion(2, "reflection identity", 1):
        for nu in range(2, 7):
            for j in range(1, 41):
                assert comb(nu * j, j) - (nu - 1) * comb(nu * j, j - 1) == star_lhs(nu, j)
                assert star_lhs(nu, j) * j == comb(nu * j, j - 1)


def test_criterion_03_eta(criterion):
    with criterion(3, "eta identity", 5):
        for nu in range(2, 6):
            zm1 = solve_z(nu, 20) - 1
            for i in range(1, 6):
                power = series_pow(zm1, i)
                for j in range(1, 21):
                    want = eta(nu, i, j)
                    if j >= i:
                        assert want * j == i * comb(nu * j, j - i)
                    assert eta_by_convolution(nu, i, j) == want
                    assert power[j] == want
        for j in range(1, 6):
            for i in range(1, j + 1):
                assert len(enumerate_queue_arrangements(2, i, j)) == eta(2, i, j)


def test_criterion_04_log(criterion):
    with criterion(4, "log identity", 2):
        for nu in range(2, 6):
            log_z = series_log(solve_z(nu, 30))
            for j in range(1, 31):
                assert log_z[j] == log_coefficient(nu, j)
                assert log_z[j] * j == comb(nu * j - 1, j - 1)


def test_criterion_05_bijections(criterion):
    with criterion(5, "bijection round trips", 5):
        for nu in range(2, 5):
            for j in range(0, 16 // nu + 1):
                for p in enumerate_dyck_paths(nu, j):
                    assert queue_to_path(path_to_queue(p)) == p
        for nu in (2, 3):
            for j in range(1, 12 // nu + 1):
                for i in range(1, j + 1):
                    arrangements = enumerate_queue_arrangements(nu, i, j)
                    for q in arrangements:
                        assert split_queue(merge_queues(q), nu, i) == q
                    lines = enumerate_lines(nu, (nu - 1) * j + i - 1, j - i)
                    assert len(lines) == len(arrangements)
                    for line in lines:
                        assert merge_queues(split_queue(line, nu, i)) == line


def test_criterion_06_genus_zero(criterion):
    with criterion(6, "genus-0 map counts", 30):
        assert (kappa0(2, 1), kappa0(2, 2), kappa0(2, 3), kappa0(3, 1), kappa0(4, 1)) == (2, 36, 1728, 5, 14)
        assert kappa_from_series(e0_series(2, 3), 3) == 1728
        for nu, j in ORACLE_RANGE:
            t = count_maps_oracle(nu, j)
            assert t.total_matchings <= 2_027_025
            assert kappa0(nu, j) == t.count(0)


def test_criterion_07_genus_one(criterion):
    with criterion(7, "genus-1 map counts", 30):
        assert (kappa1(2, 1), kappa1(2, 2), kappa1(3, 1)) == (1, 60, 10)
        for nu, j in ORACLE_RANGE:
            assert kappa1(nu, j) == count_maps_oracle(nu, j).count(1)
        for nu in range(2, 5):
            e1 = e1_series(nu, 12)
            for j in range(1, 13):
                assert e1[j] * factorial(j) == kappa1(nu, j)


def test_criterion_08_assembly(criterion):
    with criterion(8, "genus-0 assembly", 2):
        for nu in range(2, 7):
            for j in range(1, 21):
                assert kappa0_assembled(nu, j) == kappa0(nu, j)


def test_criterion_09_psg(criterion):
    with criterion(9, "power series of z", 5):
        for nu in range(2, 6):
            z = solve_z(nu, 25)
            for alpha in range(6):
                power = series_pow(z, alpha)
                for j in range(26):
                    assert power[j] == psg_coefficient(nu, alpha, j)
                assert verify_psg_second(nu, alpha, 25)
            assert verify_zprime(nu, 25)


def test_criterion_10_harness(criterion, capsys):
    with criterion(10, "verify harness contract", 60):
        assert main(["verify", "--suite", "all"]) == 0
        capsys.readouterr()
        for suite in verify.SUITES:
            assert main(["verify", "--suite", suite, "--mutate", suite]) == 1
            capsys.readouterr()

