"""Higher Catalan numbers and the coefficient families built from them.

``zeta(nu, j) = C(nu j, j - 1) / j`` is the coefficient of ``s**j`` in the
root ``z(s)`` of ``s z**nu - z + 1 = 0``.  The other families here are the
coefficients of ``(z - 1)**i``, ``log z`` and ``z**alpha``.
"""

from __future__ import annotations

from fractions import Fraction

from .series import Scalar, binom, gbinom


def _check_nu(nu: int) -> None:
    if nu < 2:
        raise ValueError(f"nu must be >= 2, got {nu}")


def higher_catalan(nu: int, j: int) -> int:
    """``C(nu j, j-1) / j`` for ``j >= 1`` and 1 for ``j = 0``.

    >>> [higher_catalan(2, j) for j in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    _check_nu(nu)
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if j == 0:
        return 1
    q, r = divmod(binom(nu * j, j - 1), j)
    assert r == 0
    return q


def convolution_power(seq: list[int], i: int, upto: int) -> list[int]:
    """Coefficients ``0..upto`` of ``(sum seq[k] s**k)**i`` by repeated convolution."""
    out = [1] + [0] * upto
    for _ in range(i):
        nxt = [0] * (upto + 1)
        for a, x in enumerate(out):
            if x:
                for b in range(upto + 1 - a):
                    if b < len(seq) and seq[b]:
                        nxt[a + b] += x * seq[b]
        out = nxt
    return out


def catalan_by_recursion(nu: int, j_max: int) -> list[int]:
    """``zeta_0 .. zeta_{j_max}`` from ``zeta_j = sum_{j_1+...+j_nu = j-1} prod zeta_{j_k}``."""
    _check_nu(nu)
    zeta = [1]
    for j in range(1, j_max + 1):
        zeta.append(convolution_power(zeta, nu, j - 1)[j - 1])
    return zeta


def eta(nu: int, i: int, j: int) -> int:
    """Coefficient of ``s**j`` in ``(z - 1)**i``: ``(i/j) C(nu j, j-i)`` for ``j >= i``.

    Zero for ``j < i``; ``i = 0`` gives the constant series 1.
    """
    _check_nu(nu)
    if i < 0 or j < 0:
        raise ValueError(f"need i >= 0 and j >= 0, got i={i}, j={j}")
    if i == 0:
        return int(j == 0)
    if j < i:
        return 0
    q, r = divmod(i * binom(nu * j, j - i), j)
    assert r == 0
    return q


def eta_by_convolution(nu: int, i: int, j: int) -> int:
    """``eta`` as the ``i``-fold convolution of ``(0, zeta_1, zeta_2, ...)``."""
    seq = [0] + [higher_catalan(nu, k) for k in range(1, j + 1)]
    return convolution_power(seq, i, j)[j]


def log_coefficient(nu: int, j: int) -> Fraction:
    """Coefficient of ``s**j`` in ``log z``: ``C(nu j - 1, j - 1) / j``."""
    _check_nu(nu)
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return Fraction(binom(nu * j - 1, j - 1), j)


def psg_coefficient(nu: int, alpha: Scalar, j: int) -> Fraction:
    """Coefficient of ``s**j`` in ``z**alpha``: ``alpha/(alpha + nu j) * C(alpha + nu j, j)``.

    The binomial takes a rational top via the falling factorial.  At ``j = 0``
    the value is 1 for every alpha (the removable singularity at alpha = 0
    included).  Raises ``ValueError`` when ``alpha + nu j = 0`` with ``j > 0``.
    """
    _check_nu(nu)
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if j == 0:
        return Fraction(1)
    alpha = Fraction(alpha)
    top = alpha + nu * j
    if top == 0:
        raise ValueError(f"alpha + nu*j = 0 (alpha={alpha}, nu={nu}, j={j})")
    return alpha / top * gbinom(top, j)


def psg_by_eta(nu: int, alpha: int, j: int) -> int:
    """``z**alpha = (1 + (z-1))**alpha`` expanded: ``sum_i C(alpha, i) eta(nu, i, j)``."""
    return sum(binom(alpha, i) * eta(nu, i, j) for i in range(alpha + 1))


def star_lhs(nu: int, j: int) -> int:
    """All paths minus those dipping below the axis: ``C(nu j, j) - (nu-1) C(nu j, j-1)``."""
    return binom(nu * j, j) - (nu - 1) * binom(nu * j, j - 1)
