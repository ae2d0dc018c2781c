from fractions import Fraction
from math import comb

import pytest

from tbinom.genbinom import (
    diagonal,
    expansion_direct,
    expansion_method1,
    expansion_method2,
    f_poly,
    genbinom_at,
    genbinom_minus_one,
    genbinom_symbolic,
    method2_coefficient,
    prop_n_nplus1_sides,
    relation_41_sides,
)
from tbinom.numeric import binom_rational
from tbinom.polyalg import T, X, PolyXT, binom_x, exact_divide, from_binomial_basis, to_binomial_basis

Tx = PolyXT.from_t(T)
K = PolyXT.gen(("k", "t"))


def bx(i):
    return binom_x(i)


def test_first_values_as_displayed():
    one_minus = 1 - Tx
    assert genbinom_symbolic(1) == Tx * X
    assert genbinom_symbolic(2) == Tx**2 * bx(2) + one_minus * X * Fraction(1, 2)
    assert genbinom_symbolic(3) == Tx**3 * bx(3) + Tx * one_minus * bx(2) - Tx * one_minus * X * Fraction(1, 3)
    four = (
        Tx**4 * bx(4)
        + Tx**2 * one_minus * bx(3) * Fraction(3, 2)
        - one_minus * (Tx * Tx * 8 + Tx * 3 - 3) * bx(2) * Fraction(1, 12)
        + (1 - Tx * Tx) * (Tx * 2 - 1) * X * Fraction(1, 8)
    )
    assert genbinom_symbolic(4) == four


@pytest.mark.parametrize("k", range(0, 9))
def test_classical_at_t_equal_one(k):
    for n in (-3, 0, 2, 5, 9):
        assert genbinom_at(n, k)(1) == binom_rational(n, k)


@pytest.mark.parametrize("k", range(1, 10))
def test_degree_k_and_shape(k):
    p = genbinom_symbolic(k)
    assert p.deg_x == k and p.deg_t == k
    # t^k binom(x,k) + (1-t) x P
    rest = p - Tx**k * bx(k)
    exact_divide(exact_divide(rest, 1 - T), X)


@pytest.mark.parametrize("k", [1, 3, 5, 7])
def test_odd_k_divisible_by_t(k):
    exact_divide(genbinom_symbolic(k), T)


def test_negative_k_is_zero():
    assert genbinom_at(3, -1).is_zero()


def test_value_two_three():
    # 3 <2,3> = t(1-t) <-1,0>
    assert genbinom_at(2, 3) == T * (1 - T) / 3


@pytest.mark.parametrize("k", range(0, 12))
def test_minus_one_closed_form(k):
    assert genbinom_minus_one(k) == genbinom_at(-1, k)
    assert genbinom_minus_one(k)(1) == (-1) ** k


@pytest.mark.parametrize("n", range(0, 12))
def test_diagonal(n):
    d = diagonal(n)
    assert d == genbinom_at(n, n)
    if n >= 1:
        assert d == 1 + (T - 1) * diagonal(n - 1)
    assert d * (2 - T) == 1 - (T - 1) ** (n + 1)


def test_diagonal_values_differ_from_one():
    assert diagonal(1) == T
    assert diagonal(2) == T * T - T + 1


@pytest.mark.parametrize("k", range(2, 10))
def test_one_choose_k(k):
    assert genbinom_at(1, k) * k == (1 - T) * genbinom_minus_one(k - 2)


@pytest.mark.parametrize("k", range(3, 12))
def test_n_choose_k_displays(k):
    m1 = genbinom_minus_one
    assert genbinom_at(2, k) * comb(k, 2) == T * (1 - T) * m1(k - 3)
    if k >= 4:
        assert genbinom_at(3, k) * comb(k, 3) == (1 - T) * (T * T + (1 - T) * Fraction(k - 1, 2)) * m1(k - 4)
    if k >= 5:
        assert genbinom_at(4, k) * comb(k, 4) == T * (1 - T) * (T * T + (1 - T) * Fraction(5 * k - 8, 6)) * m1(k - 5)


def test_f_polys():
    Kt = PolyXT.from_t(T, ("k", "t"))
    assert f_poly(1) == PolyXT.const(1, ("k", "t"))
    assert f_poly(2) == Kt
    assert f_poly(3) == Kt * Kt + (1 - Kt) * (K - 1) * Fraction(1, 2)
    assert f_poly(4) == Kt * (Kt * Kt + (1 - Kt) * (K * 5 - 8) * Fraction(1, 6))


@pytest.mark.parametrize("n,k", [(1, 3), (2, 5), (4, 9), (6, 7)])
def test_relation_41(n, k):
    lhs, rhs = relation_41_sides(n, k)
    assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 8))
def test_prop_n_nplus1(n):
    lhs, rhs = prop_n_nplus1_sides(n)
    assert lhs == rhs


@pytest.mark.parametrize("k", range(1, 9))
def test_expansion_methods_agree(k):
    e1, e2, e3 = expansion_method1(k), expansion_method2(k), expansion_direct(k)
    assert e1 == e2 == e3
    assert e1.c(k) == T**k
    assert from_binomial_basis(e1) == genbinom_symbolic(k)


@pytest.mark.parametrize("k", range(6, 11))
def test_leading_expansion_rows(k):
    e = expansion_method1(k)
    assert e.c(k - 1) == -T ** (k - 2) * (T - 1) * Fraction(k - 1, 2)
    assert e.c(k - 2) == T ** (k - 4) * (T - 1) * (T * T + (T - 1) * Fraction(3 * (k - 3), 8)) * Fraction(k - 2, 3)


@pytest.mark.parametrize("k", range(3, 12))
def test_c2_display(k):
    lhs = exact_divide(method2_coefficient(2, k), 1 - T) * comb(k, 2)
    assert lhs == T * genbinom_minus_one(k - 3) - genbinom_minus_one(k - 2) * (k - 1)


def test_table_row_k4_i1():
    assert expansion_method1(4).c(1) == (1 - T * T) * (2 * T - 1) / 8


def test_to_binomial_basis_of_symbolic():
    assert to_binomial_basis(genbinom_symbolic(2)).c(1) == (1 - T) / 2
