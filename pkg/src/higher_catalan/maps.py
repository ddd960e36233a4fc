"""Closed-form genus-0 and genus-1 map counts and the series they come from.

All generating functions here are series in ``t`` whose ``j``-th coefficient
is ``kappa_g(nu, j) / j!``, i.e. ``e_g`` evaluated at ``-t``.  They are built
from ``z(c t)`` where ``c = 2 nu C(2 nu - 1, nu - 1)``; :func:`z_scaled` is the
single place that substitution happens.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .catalan import eta, higher_catalan, log_coefficient
from .series import TruncatedSeries, binom, series_log, solve_z


def c(nu: int) -> int:
    return 2 * nu * binom(2 * nu - 1, nu - 1)


def mu(nu: int) -> Fraction:
    return Fraction((nu - 1) ** 2, 4 * nu * (nu + 1))


def r(nu: int) -> Fraction:
    return Fraction(3 * (nu + 1), nu - 1)


def z_scaled(nu: int, order: int) -> TruncatedSeries:
    """``z(c t)`` as a series in ``t``."""
    return solve_z(nu, order).rescale(c(nu))


def e0_series(nu: int, order: int) -> TruncatedSeries:
    """``mu (z - 1)(z - r) + log(z) / 2`` at ``z = z(c t)``."""
    z = z_scaled(nu, order)
    return mu(nu) * (z - 1) * (z - r(nu)) + series_log(z) / 2


def e1_series(nu: int, order: int) -> TruncatedSeries:
    """``-log(nu - (nu-1) z) / 12`` at ``z = z(c t)``.

    ``nu - (nu-1) z = 1 - (nu-1)(z - 1)`` has constant term 1, so the formal
    logarithm needs no branch choice.
    """
    z = z_scaled(nu, order)
    return -series_log(1 - (nu - 1) * (z - 1)) / 12


def e1_derivative_series(nu: int, order: int) -> TruncatedSeries:
    """``d/dt`` of :func:`e1_series` in closed form.

    With ``z' = z**(nu+1) / (nu - (nu-1) z)`` this is
    ``c (nu-1)/12 * z**(nu+1) / (nu - (nu-1) z)**2`` at ``z = z(c t)``; the
    factor ``c`` is the chain rule for ``s = c t``.
    """
    z = z_scaled(nu, order)
    denom = nu - (nu - 1) * z
    return Fraction(c(nu) * (nu - 1), 12) * z ** (nu + 1) / (denom * denom)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


def kappa0(nu: int, j: int) -> int:
    """Connected genus-0 gluings of ``j`` labeled ``2 nu``-valent vertices.

    ``c**j (nu j - 1)! / ((nu-1) j + 2)!``.
    """
    if nu < 2 or j < 1:
        raise ValueError(f"need nu >= 2 and j >= 1, got nu={nu}, j={j}")
    return _as_int(Fraction(c(nu) ** j * factorial(nu * j - 1), factorial((nu - 1) * j + 2)))


def kappa0_assembled(nu: int, j: int) -> int:
    """``kappa0`` from the coefficients of ``z``, ``(z-1)**2`` and ``log z``."""
    if nu < 2 or j < 1:
        raise ValueError(f"need nu >= 2 and j >= 1, got nu={nu}, j={j}")
    m = mu(nu)
    bracket = (
        -(r(nu) - 1) * m * higher_catalan(nu, j)
        + m * eta(nu, 2, j)
        + log_coefficient(nu, j) / 2
    )
    return _as_int(factorial(j) * c(nu) ** j * bracket)


def kappa1(nu: int, j: int) -> int:
    """Connected genus-1 gluings: ``(j-1)! c**j / 12 * sum_k (nu-1)**k C(nu j, j-k)``."""
    if nu < 2 or j < 1:
        raise ValueError(f"need nu >= 2 and j >= 1, got nu={nu}, j={j}")
    total = sum((nu - 1) ** k * binom(nu * j, j - k) for k in range(1, j + 1))
    return _as_int(Fraction(factorial(j - 1) * c(nu) ** j * total, 12))


def kappa_from_series(series: TruncatedSeries, j: int) -> Fraction:
    """``j! [t**j]`` of a map generating function."""
    return factorial(j) * series[j]


def psg_second_sides(nu: int, alpha: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``z**(alpha+1) / (nu - (nu-1) z)`` and ``sum_j C(alpha + nu j, j) s**j``."""
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    z = solve_z(nu, order)
    lhs = z ** (alpha + 1) / (nu - (nu - 1) * z)
    rhs = TruncatedSeries([binom(alpha + nu * k, k) for k in range(order + 1)])
    return lhs, rhs


def verify_psg_second(nu: int, alpha: int, order: int) -> bool:
    lhs, rhs = psg_second_sides(nu, alpha, order)
    return lhs == rhs


def zprime_sides(nu: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``z' (nu - (nu-1) z)`` and ``z**(nu+1)``, both at order ``order - 1``."""
    z = solve_z(nu, order)
    lower = z.truncate(order - 1)
    return z.derivative() * (nu - (nu - 1) * lower), lower ** (nu + 1)


def verify_zprime(nu: int, order: int) -> bool:
    if order == 0:
        return True
    lhs, rhs = zprime_sides(nu, order)
    return lhs == rhs
