import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gvlocal.chebyshev import p_coefficient, p_coefficient_sum, p_poly, p_trig_residual
from gvlocal.series import DomainError, Polynomial


def test_small_polynomials():
    assert p_poly(1).poly == Polynomial([0, 1])
    assert p_poly(2).poly == Polynomial([0, 4, -1])
    assert p_poly(5).poly == Polynomial([0, 25, -50, 35, -10, 1])


def test_p2_trig_identity():
    # 4 sin^2(2t) = 16 sin^2 t (1 - sin^2 t) = 4y - y^2 with y = 4 sin^2 t
    y = Polynomial([0, 1])
    assert p_poly(2).poly == y * 4 - y * y


def test_zero_is_rejected():
    with pytest.raises(DomainError):
        p_poly(0)


@pytest.mark.parametrize("k,order", [(1, 4), (2, 6), (7, 10), (11, 14)])
def test_trig_residual_vanishes(k, order):
    assert p_trig_residual(k, order).is_zero()


@pytest.mark.parametrize("k", range(1, 30))
def test_shape_invariants(k):
    p = p_poly(k).poly
    assert p.degree == k and p[0] == 0 and p.is_integral()
    assert p[1] == k * k and p[k] == (-1) ** (k + 1)
    assert all(p[a] * (-1) ** (a + 1) > 0 for a in range(1, k + 1))


def test_coefficient_formulas_agree():
    for l in range(2, 21):
        for n in range(2, l + 1):
            assert p_coefficient(n, l) == p_coefficient_sum(n, l)


def test_composition_law():
    for a in range(1, 25):
        for b in range(1, 24 // a + 1):
            assert p_poly(a * b).poly == p_poly(b).poly(p_poly(a).poly)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("l", [1, 2, 3])
@pytest.mark.parametrize("b", [1, 2])
def test_prime_power_congruence(p, l, b):
    lhs = p_poly(p).poly ** (p ** (l - 1) * b)
    rhs = Polynomial.monomial(p**l * b)
    assert all((lhs[i] - rhs[i]) % p**l == 0 for i in range(lhs.degree + 1))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("l", [1, 2, 3])
def test_freshman_dream_mod_prime_power(p, l):
    for x in range(-4, 5):
        lhs = Polynomial([x, 1]) ** (p**l)
        rhs = (Polynomial.monomial(p) + Polynomial([x**p])) ** (p ** (l - 1))
        assert all((lhs[i] - rhs[i]) % p**l == 0 for i in range(lhs.degree + 1))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_binomial_divisibility(p):
    for l in range(2, 7):
        for k in range(1, l):
            assert math.comb(p ** (l - 1), k) % p ** (l - k) == 0


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=-6, max_value=6))
def test_evaluation_at_integer_angles(k, y):
    # P_k is integral, so integer inputs give integers
    value = p_poly(k).poly(Fraction(y))
    assert value.denominator == 1
