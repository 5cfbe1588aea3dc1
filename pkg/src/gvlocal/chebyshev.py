"""The integer polynomials ``P_k`` with ``P_k(4 sin^2 t) = 4 sin^2(k t)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .series import DomainError, Polynomial, PowerSeries, ps_compose, sin_sq_series

__all__ = ["PPoly", "p_coefficient", "p_coefficient_sum", "p_poly", "p_trig_residual"]

MEMO_LIMIT = 64
_memo: dict[int, PPoly] = {}


@dataclass(frozen=True)
class PPoly:
    k: int
    poly: Polynomial

    def __post_init__(self):
        p = self.poly
        if p.degree != self.k or p[0] != 0:
            raise ValueError(f"P_{self.k} must have degree {self.k} and no constant term")
        if not p.is_integral():
            raise ValueError(f"P_{self.k} has a non-integer coefficient")
        if p[1] != self.k**2 or p[self.k] != (-1) ** (self.k + 1):
            raise ValueError(f"P_{self.k} has the wrong linear or leading coefficient")
        for a in range(1, self.k + 1):
            if p[a] == 0 or (p[a] > 0) != (a % 2 == 1):
                raise ValueError(f"P_{self.k} breaks the alternating sign pattern at y^{a}")

    def __call__(self, y):
        return self.poly(y)


def p_coefficient(n: int, k: int) -> Fraction:
    """``(k/n) * binom(k+n-1, 2n-1)``: the magnitude of the ``y**n`` coefficient."""
    return Fraction(k, n) * comb(k + n - 1, 2 * n - 1)


def p_coefficient_sum(n: int, k: int) -> Fraction:
    """Same magnitude as :func:`p_coefficient`, from the longer sum over ``j``.

    Kept as an independent check on the closed form.
    """
    if n == 1:
        return Fraction(k * k)
    total = sum((k - j + 1) * (j - 1) * comb(j + n - 3, j - n) for j in range(n, k + 1))
    return Fraction(total, n - 1)


def p_poly(k: int) -> PPoly:
    if k < 1:
        raise DomainError(f"P_k is defined for k >= 1, got {k}")
    cached = _memo.get(k)
    if cached is not None:
        return cached
    coeffs = [Fraction(0)]
    for a in range(1, k + 1):
        # -p_{a,k} (-y)^a
        coeffs.append(-p_coefficient(a, k) * (-1) ** a)
    result = PPoly(k, Polynomial(coeffs))
    if k <= MEMO_LIMIT:
        _memo[k] = result
    return result


def p_trig_residual(k: int, order: int) -> PowerSeries:
    """``P_k(4 sin^2 t) - 4 sin^2(k t)`` in powers of ``t**2``; always zero."""
    if order < k:
        raise ValueError("order must be at least k")
    lhs = ps_compose(p_poly(k).poly.to_series(order, "y"), sin_sq_series(order))
    return lhs - sin_sq_series(order, scale=k)
