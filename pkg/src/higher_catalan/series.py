"""Exact truncated power series over the rationals.

Scalars are Python ``int`` and :class:`fractions.Fraction`; both are exact and
``Fraction`` is always kept in lowest terms with a positive denominator, so
coefficient equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def gbinom(top: Scalar, k: int) -> Fraction:
    """Falling-factorial binomial ``top (top-1) ... (top-k+1) / k!`` for rational ``top``."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    top = Fraction(top)
    for i in range(k):
        num *= top - i
        num /= i + 1
    return num


def double_factorial(n: int) -> int:
    """n!! for n >= -1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


class TruncatedSeries:
    """A power series known modulo ``s**(order + 1)``.

    Binary operations require equal orders; mismatched orders raise
    ``ValueError`` instead of silently truncating.  An order of ``-1`` denotes
    the empty series (nothing known), which is what differentiating an
    order-0 series yields.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Scalar], order: int | None = None):
        c = tuple(Fraction(x) for x in coefficients)
        if order is not None:
            if order < -1:
                raise ValueError(f"order must be >= -1, got {order}")
            if len(c) > order + 1:
                c = c[: order + 1]
            else:
                c = c + (Fraction(0),) * (order + 1 - len(c))
        self._c = c

    @classmethod
    def constant(cls, value: Scalar, order: int) -> TruncatedSeries:
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        """The series ``s``."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i):
        return self._c[i]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(x) for x in self._c]}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError(
                    f"truncation orders differ: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        raise TypeError(f"cannot combine TruncatedSeries with {type(other).__name__}")

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        return TruncatedSeries(a + b for a, b in zip(self._c, other._c))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-a for a in self._c)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> TruncatedSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(a * other for a in self._c)
        other = self._coerce(other)
        a, b = self._c, other._c
        n = len(a)
        out = []
        for k in range(n):
            acc = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc += a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return TruncatedSeries(a / other for a in self._c)
        other = self._coerce(other)
        b = other._c
        if not b or b[0] == 0:
            raise ZeroDivisionError("divisor series has zero constant term")
        q: list[Fraction] = []
        for k, ak in enumerate(self._c):
            acc = ak
            for i in range(1, k + 1):
                if b[i]:
                    acc -= b[i] * q[k - i]
            q.append(acc / b[0])
        return TruncatedSeries(q)

    def __rtruediv__(self, other) -> TruncatedSeries:
        return self._coerce(other) / self

    def __pow__(self, alpha) -> TruncatedSeries:
        return series_pow(self, alpha)

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> TruncatedSeries:
        return TruncatedSeries(i * a for i, a in enumerate(self._c) if i)

    def antiderivative(self) -> TruncatedSeries:
        return TruncatedSeries([0] + [a / (i + 1) for i, a in enumerate(self._c)])

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._c, order)

    def rescale(self, factor: Scalar) -> TruncatedSeries:
        """``f(factor * s)``: coefficient ``j`` multiplied by ``factor**j``."""
        out = []
        p = Fraction(1)
        for a in self._c:
            out.append(a * p)
            p *= factor
        return TruncatedSeries(out)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._c)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a / b


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    return f.derivative()


def series_antiderivative(f: TruncatedSeries) -> TruncatedSeries:
    return f.antiderivative()


def _require_unit_constant(f: TruncatedSeries, what: str) -> None:
    if f.order < 0 or f[0] != 1:
        raise ValueError(f"{what} needs constant term exactly 1")


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """``log f`` for ``f(0) = 1``, as the antiderivative of ``f'/f``."""
    _require_unit_constant(f, "series_log")
    if f.order == 0:
        return TruncatedSeries([0])
    return (f.derivative() / f.truncate(f.order - 1)).antiderivative()


def series_exp(h: TruncatedSeries) -> TruncatedSeries:
    """``exp h`` for ``h(0) = 0``, from ``g' = h' g`` solved coefficientwise."""
    if h.order >= 0 and h[0] != 0:
        raise ValueError("series_exp needs constant term 0")
    g = [Fraction(1)]
    for n in range(1, len(h)):
        acc = sum((k * h[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
        g.append(acc / n)
    return TruncatedSeries(g, h.order)


def series_pow(f: TruncatedSeries, alpha: Scalar) -> TruncatedSeries:
    """``f**alpha`` modulo the truncation order.

    Nonnegative integer powers are plain products (repeated squaring) and
    accept any constant term.  Other rational exponents need ``f(0) = 1`` and
    use the recurrence obtained from ``f g' = alpha f' g``.
    """
    if isinstance(alpha, Fraction) and alpha.denominator == 1:
        alpha = int(alpha)
    if isinstance(alpha, int) and alpha >= 0:
        if alpha == 0:
            return TruncatedSeries.constant(1, f.order)
        out = None
        base = f
        while alpha:
            if alpha & 1:
                out = base if out is None else out * base
            alpha >>= 1
            if alpha:
                base = base * base
        return out
    _require_unit_constant(f, "series_pow")
    alpha = Fraction(alpha)
    g = [Fraction(1)]
    for n in range(1, len(f)):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if f[k]:
                acc += (alpha * k - (n - k)) * f[k] * g[n - k]
        g.append(acc / n)
    return TruncatedSeries(g, f.order)


@lru_cache(maxsize=None)
def solve_z(nu: int, order: int) -> TruncatedSeries:
    """Series ``z`` with ``z(0) = 1`` and ``s z**nu - z + 1 = 0`` mod ``s**(order+1)``.

    Fixed-point iteration ``z <- 1 + s z**nu``; pass ``k`` fixes coefficient
    ``k``, so each pass is carried out at the smallest order that matters.
    """
    if nu < 2:
        raise ValueError(f"nu must be >= 2, got {nu}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    z = TruncatedSeries([1], 0)
    for k in range(1, order + 1):
        zk = TruncatedSeries(z.coefficients, k - 1)
        zn = zk ** nu
        z = TruncatedSeries((1,) + zn.coefficients, k)
    return z


def z_residual(z: TruncatedSeries, nu: int) -> TruncatedSeries:
    """``s z**nu - z + 1`` at the order of ``z``."""
    s = TruncatedSeries.variable(z.order) if z.order >= 1 else TruncatedSeries([0], z.order)
    return s * z ** nu - z + 1


def format_scalar(x: Scalar) -> str:
    """Exact decimal string: ``"p"`` or ``"p/q"``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str) -> Fraction:
    return Fraction(text.strip())


def as_list(f: TruncatedSeries | Sequence[Scalar]) -> list[str]:
    return [format_scalar(x) for x in f]
