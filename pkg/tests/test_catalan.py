from fractions import Fraction

import pytest

from higher_catalan.catalan import (
    catalan_by_recursion,
    eta,
    eta_by_convolution,
    higher_catalan,
    log_coefficient,
    psg_by_eta,
    psg_coefficient,
    star_lhs,
)
from higher_catalan.lattice import iter_all_paths
from higher_catalan.series import series_log, series_pow, solve_z

NUS = [2, 3, 4, 5]


def brute_dyck(nu, j):
    return sum(1 for p in iter_all_paths(nu, j) if p.is_dyck())


def test_higher_catalan_examples():
    assert higher_catalan(2, 3) == 5 == brute_dyck(2, 3)
    assert higher_catalan(3, 2) == 3 == brute_dyck(3, 2)
    for nu in range(2, 9):
        assert higher_catalan(nu, 1) == 1
        assert higher_catalan(nu, 0) == 1


def test_classical_catalan():
    assert [higher_catalan(2, j) for j in range(10)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


@pytest.mark.parametrize("nu", NUS)
def test_formula_matches_series(nu):
    z = solve_z(nu, 30)
    assert [higher_catalan(nu, j) for j in range(31)] == list(z)


def test_recursion_examples():
    assert catalan_by_recursion(2, 2) == [1, 1, 2]
    assert catalan_by_recursion(3, 3) == [1, 1, 3, 12]
    for nu in range(2, 7):
        assert catalan_by_recursion(nu, 1) == [1, 1]


@pytest.mark.parametrize("nu", NUS)
def test_recursion_matches_formula(nu):
    assert catalan_by_recursion(nu, 30) == [higher_catalan(nu, j) for j in range(31)]


def test_reflection_identity():
    for nu in range(2, 7):
        for j in range(1, 41):
            assert star_lhs(nu, j) == higher_catalan(nu, j)


def test_eta_examples():
    assert eta(2, 2, 2) == 1
    for nu in NUS:
        for i in range(1, 6):
            for j in range(i):
                assert eta(nu, i, j) == 0
    for j in range(1, 15):
        assert eta(2, 1, j) == higher_catalan(2, j)


@pytest.mark.parametrize("nu", NUS)
def test_eta_matches_convolution_and_series(nu):
    zm1 = solve_z(nu, 20) - 1
    for i in range(1, 6):
        p = series_pow(zm1, i)
        for j in range(21):
            assert eta(nu, i, j) == eta_by_convolution(nu, i, j) == p[j]


def test_log_coefficient_examples():
    assert log_coefficient(2, 1) == 1
    assert log_coefficient(2, 2) == Fraction(3, 2)
    assert log_coefficient(3, 2) == Fraction(5, 2)


@pytest.mark.parametrize("nu", NUS)
def test_log_coefficient_matches_series(nu):
    lz = series_log(solve_z(nu, 30))
    assert lz[0] == 0
    for j in range(1, 31):
        assert log_coefficient(nu, j) == lz[j]


@pytest.mark.parametrize("nu", NUS)
def test_log_coefficient_is_standard_mercator_sum(nu):
    # log(1 + u) = sum (-1)**(i+1) u**i / i with u = z - 1; the alternating sign starts positive
    for j in range(1, 16):
        mercator = sum(Fraction((-1) ** (i + 1) * eta(nu, i, j), i) for i in range(1, j + 1))
        assert mercator == log_coefficient(nu, j)


def test_psg_examples():
    for nu in NUS:
        for j in range(12):
            assert psg_coefficient(nu, 1, j) == higher_catalan(nu, j)
        for j in range(1, 12):
            assert psg_coefficient(nu, 0, j) == 0
    assert psg_coefficient(2, 3, 2) == 9


def test_psg_singular():
    with pytest.raises(ValueError):
        psg_coefficient(2, -4, 2)
    assert psg_coefficient(3, 0, 0) == 1
    assert psg_coefficient(2, -4, 0) == 1


@pytest.mark.parametrize("nu", NUS)
def test_psg_matches_powers_and_eta_sums(nu):
    z = solve_z(nu, 20)
    for alpha in range(6):
        p = series_pow(z, alpha)
        for j in range(21):
            assert psg_coefficient(nu, alpha, j) == p[j] == psg_by_eta(nu, alpha, j)


@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(-1, 3), Fraction(5, 2)])
def test_psg_rational_exponent(alpha):
    # the closed form with a falling-factorial binomial also matches fractional powers
    z = solve_z(3, 10)
    p = series_pow(z, alpha)
    for j in range(11):
        assert psg_coefficient(3, alpha, j) == p[j]


def test_rejects_small_nu():
    for fn in (higher_catalan, log_coefficient):
        with pytest.raises(ValueError):
            fn(1, 2)
