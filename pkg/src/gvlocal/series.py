"""Exact dense polynomials and truncated power series over the rationals.

Every coefficient is a :class:`fractions.Fraction`; nothing here ever touches
floating point.  A :class:`PowerSeries` of order ``N`` stores the coefficients
of ``x**0 .. x**N``; binary operations between series of different orders
truncate to the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable

__all__ = [
    "DomainError",
    "Polynomial",
    "PowerSeries",
    "arcsin_norm_series",
    "ps_arith",
    "ps_compose",
    "ps_exp",
    "ps_ipow",
    "ps_log",
    "sin_sq_series",
]


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def _fractions(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial; ``coefficients[i]`` multiplies ``x**i``.

    Trailing zeros are stripped on construction so equal polynomials compare
    equal.  The zero polynomial has no coefficients and degree ``-1``.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = ()):
        coeffs = list(_fractions(coefficients))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> Polynomial:
        return cls([0] * power + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self), len(other))
        return Polynomial(self[i] - other[i] for i in range(n))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coefficients)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            scalar = Fraction(other)
            return Polynomial(c * scalar for c in self.coefficients)
        if not self or not other:
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise DomainError("negative powers of polynomials are not polynomials")
        result = Polynomial([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, x):
        """Evaluate at a scalar, or compose when ``x`` is a Polynomial."""
        acc = Polynomial() if isinstance(x, Polynomial) else Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + (Polynomial([c]) if isinstance(x, Polynomial) else c)
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def integer_coefficients(self) -> list[int]:
        if not self.is_integral():
            raise DomainError(f"non-integer coefficient in {self}")
        return [int(c) for c in self.coefficients]

    def to_series(self, order: int, variable: str = "x") -> PowerSeries:
        return PowerSeries([self[i] for i in range(order + 1)], variable)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coefficients) if c]
        return "Polynomial(" + (" + ".join(terms) or "0") + ")"


@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series ``sum(c[i] * x**i for i <= order)``.

    ``variable`` is a documentation tag only (``t2``, ``y``, ``q``, ``r``);
    it never affects arithmetic.
    """

    coefficients: tuple[Fraction, ...]
    variable: str = field(default="x", compare=False)

    def __init__(self, coefficients: Iterable, variable: str = "x"):
        coeffs = _fractions(coefficients)
        if not coeffs:
            raise ValueError("a power series needs at least its constant term")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "variable", variable)

    @classmethod
    def zero(cls, order: int, variable: str = "x") -> PowerSeries:
        return cls([0] * (order + 1), variable)

    @classmethod
    def one(cls, order: int, variable: str = "x") -> PowerSeries:
        return cls([1] + [0] * order, variable)

    @classmethod
    def monomial(cls, power: int, order: int, coefficient=1, variable: str = "x") -> PowerSeries:
        coeffs = [Fraction(0)] * (order + 1)
        if power <= order:
            coeffs[power] = Fraction(coefficient)
        return cls(coeffs, variable)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, power: int) -> Fraction:
        if power < 0 or power > self.order:
            raise IndexError(f"coefficient x^{power} is outside order {self.order}")
        return self.coefficients[power]

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coefficients[: order + 1], self.variable)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        return ps_arith(self, other, "add")

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return ps_arith(self, other, "sub")

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return ps_arith(self, other, "mul")
        scalar = Fraction(other)
        return PowerSeries((c * scalar for c in self.coefficients), self.variable)

    __rmul__ = __mul__

    def __neg__(self) -> PowerSeries:
        return PowerSeries((-c for c in self.coefficients), self.variable)

    def __pow__(self, exponent: int) -> PowerSeries:
        return ps_ipow(self, exponent)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def scale_variable(self, factor) -> PowerSeries:
        """Return ``f(factor * x)``."""
        factor = Fraction(factor)
        return PowerSeries(
            (c * factor**i for i, c in enumerate(self.coefficients)), self.variable
        )

    def shift_down(self, power: int) -> PowerSeries:
        """Divide by ``x**power``; the dropped coefficients must vanish."""
        if any(self.coefficients[:power]):
            raise DomainError(f"series is not divisible by x^{power}")
        return PowerSeries(self.coefficients[power:], self.variable)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coefficients)


def ps_arith(a: PowerSeries, b: PowerSeries, which: str) -> PowerSeries:
    """Add, subtract or multiply two series, truncating to the smaller order."""
    n = min(a.order, b.order)
    if which == "add":
        return PowerSeries((a[i] + b[i] for i in range(n + 1)), a.variable)
    if which == "sub":
        return PowerSeries((a[i] - b[i] for i in range(n + 1)), a.variable)
    if which == "mul":
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return PowerSeries(out, a.variable)
    raise ValueError(f"unknown operation {which!r}")


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """Return ``outer(inner(x))`` truncated to the common order."""
    if inner[0] != 0:
        raise DomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = PowerSeries.zero(n, inner.variable)
    for c in reversed(outer.coefficients[: n + 1]):
        acc = acc * inner
        acc = PowerSeries((acc[0] + c,) + acc.coefficients[1:], inner.variable)
    return acc


def ps_exp(a: PowerSeries) -> PowerSeries:
    if a[0] != 0:
        raise DomainError("exp needs a series with zero constant term")
    n = a.order
    out = [Fraction(1)] + [Fraction(0)] * n
    # n b_n = sum_{k=1}^n k a_k b_{n-k}
    for m in range(1, n + 1):
        s = sum((k * a[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
        out[m] = s / m
    return PowerSeries(out, a.variable)


def ps_log(a: PowerSeries) -> PowerSeries:
    if a[0] != 1:
        raise DomainError("log needs a series with constant term 1")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    # m b_m = m a_m - sum_{k=1}^{m-1} k b_k a_{m-k}
    for m in range(1, n + 1):
        s = sum((k * out[k] * a[m - k] for k in range(1, m)), Fraction(0))
        out[m] = (m * a[m] - s) / m
    return PowerSeries(out, a.variable)


def _inverse(a: PowerSeries) -> PowerSeries:
    if a[0] == 0:
        raise DomainError("series with zero constant term is not invertible")
    n = a.order
    inv0 = 1 / a[0]
    out = [inv0] + [Fraction(0)] * n
    for m in range(1, n + 1):
        s = sum((a[k] * out[m - k] for k in range(1, m + 1)), Fraction(0))
        out[m] = -s * inv0
    return PowerSeries(out, a.variable)


def ps_ipow(a: PowerSeries, e: int) -> PowerSeries:
    """Integer power; negative exponents go through the series inverse."""
    if e < 0:
        return ps_ipow(_inverse(a), -e)
    result = PowerSeries.one(a.order, a.variable)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def sin_sq_series(order: int, scale=1) -> PowerSeries:
    """``4 sin^2(scale * t)`` as a series in ``t**2``.

    With the default scale the coefficients start ``0, 4, -4/3, 8/45``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    scale = Fraction(scale)
    # 4 sin^2 u = 2 - 2 cos 2u
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        sign = 1 if n % 2 else -1
        coeffs.append(sign * 2 * (2 * scale) ** (2 * n) / factorial(2 * n))
    return PowerSeries(coeffs, "t2")


def arcsin_norm_series(order: int) -> PowerSeries:
    """``arcsin(sqrt(r)/2) / (sqrt(r)/2)`` as a series in ``r``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = []
    for n in range(order + 1):
        # arcsin(u)/u = sum (2n)! / (4^n n!^2 (2n+1)) u^(2n), with u^2 = r/4
        c = Fraction(factorial(2 * n), 4**n * factorial(n) ** 2 * (2 * n + 1))
        coeffs.append(c / 4**n)
    return PowerSeries(coeffs, "r")

