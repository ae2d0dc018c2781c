"""The generalized binomial coefficients <x, k> and their derived families.

<x, 0> = 1, <x, k> = 0 for k < 0, and for k >= 1

    <x, k> = (x / k) * (t <x-1, k-1> + (1-t) <x-2, k-2>).

Everything here is exact; symbolic entries are PolyXT in (x, t), f-table
entries are PolyXT in (k, t).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .numeric import RationalLike, rat
from .polyalg import (
    ONE_T,
    T,
    ZERO_T,
    BinomialExpansion,
    PolyT,
    PolyXT,
    exact_divide,
    to_binomial_basis,
)
from .series import coefficient_product

ONE_MINUS_T = 1 - T
TWO_MINUS_T = 2 - T


class GenBinomTable:
    """Memoized symbolic table; entry k is <x, k> as a PolyXT.

    Entries are built in order and never recomputed.  Reads after an entry
    exists need no locking; extension is serialized.
    """

    def __init__(self):
        self.symbolic: list[PolyXT] = [PolyXT.const(1)]
        self._lock = threading.Lock()

    @property
    def max_k(self) -> int:
        return len(self.symbolic) - 1

    def get(self, k: int) -> PolyXT:
        if k < 0:
            return PolyXT()
        if k < len(self.symbolic):
            return self.symbolic[k]
        with self._lock:
            x = PolyXT.gen()
            while len(self.symbolic) <= k:
                j = len(self.symbolic)
                prev1 = self.symbolic[j - 1].shift_x(-1) * T
                inner = prev1
                if j >= 2:
                    inner = inner + self.symbolic[j - 2].shift_x(-2) * ONE_MINUS_T
                self.symbolic.append(x * inner * Fraction(1, j))
        return self.symbolic[k]


_TABLE = GenBinomTable()


def genbinom_symbolic(k: int) -> PolyXT:
    """<x, k> as a polynomial in (x, t)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _TABLE.get(k)


@lru_cache(maxsize=None)
def _genbinom_at_cached(n: Fraction, k: int) -> PolyT:
    return _TABLE.get(k).eval_x(n)


def genbinom_at(n: RationalLike, k: int) -> PolyT:
    """<n, k> as a polynomial in t; zero for k < 0."""
    if k < 0:
        return ZERO_T
    return _genbinom_at_cached(rat(n), k)


@lru_cache(maxsize=None)
def genbinom_minus_one(k: int) -> PolyT:
    """<-1, k> = (-1)^k / k! * prod_{i=1}^{k} (k - i + 1 + (t-1) i)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return coefficient_product(k, 1) * Fraction((-1) ** k, factorial(k))


def diagonal(n: int) -> PolyT:
    """<n, n> = (1 - (t-1)^(n+1)) / (2 - t), by certified exact division."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return exact_divide(1 - (T - 1) ** (n + 1), TWO_MINUS_T)


# -- f_{n,k} ----------------------------------------------------------------

K_VARS = ("k", "t")


class FTable:
    """f_{n,k} for n = 1..n_max as PolyXT in (k, t).

    f_1 = 1, f_2 = t, f_n = t f_{n-1}(k-1) + (1-t) (k-1)/(n-1) f_{n-2}(k-2).
    """

    def __init__(self, n_max: int):
        if n_max < 1:
            raise ValueError("n_max must be >= 1")
        kvar = PolyXT.gen(K_VARS)
        t = PolyXT.from_t(T, K_VARS)
        omt = PolyXT.from_t(ONE_MINUS_T, K_VARS)
        entries = {1: PolyXT.const(1, K_VARS), 2: t}
        for n in range(3, n_max + 1):
            entries[n] = t * entries[n - 1].shift_x(-1) + omt * (kvar - 1) * entries[
                n - 2
            ].shift_x(-2) * Fraction(1, n - 1)
        self.entries = {n: entries[n] for n in range(1, n_max + 1)}
        self.n_max = n_max

    def __getitem__(self, n: int) -> PolyXT:
        return self.entries[n]

    def at(self, n: int, k: RationalLike) -> PolyT:
        """f_{n,k} with k specialized."""
        return self.entries[n].eval_x(k)


_F_CACHE: dict[int, FTable] = {}


def f_table(n_max: int) -> FTable:
    best = max((m for m in _F_CACHE if m >= n_max), default=None)
    if best is None:
        _F_CACHE[n_max] = FTable(n_max)
        best = n_max
    return _F_CACHE[best]


def f_poly(n: int) -> PolyXT:
    return f_table(max(n, 2))[n]


def f_at(n: int, k: int) -> PolyT:
    return f_table(max(n, 2)).at(n, k)


def relation_41_sides(n: int, k: int) -> tuple[PolyT, PolyT]:
    """(binom(k,n) <n,k>, (1-t) f_{n,k} <-1, k-n-1>) for k >= n+1."""
    if n < 1 or k < n + 1:
        raise ValueError("need n >= 1 and k >= n + 1")
    lhs = genbinom_at(n, k) * comb(k, n)
    rhs = ONE_MINUS_T * f_at(n, k) * genbinom_minus_one(k - n - 1)
    return lhs, rhs


def verify_relation_41(n: int, k: int) -> bool:
    lhs, rhs = relation_41_sides(n, k)
    return lhs == rhs


# -- binomial expansion, two methods ----------------------------------------


@lru_cache(maxsize=None)
def _method1_row(k: int) -> tuple:
    """(c_0(k), ..., c_k(k)) from the recurrence

    (k/i) c_i(k) = t c_{i-1}(k-1) + (1-t) sum_{m=0}^{k-i-1} (-1)^m c_{i+m-1}(k-2)

    with c_0(0) = 1 and c_0(j) = 0 for j >= 1.
    """
    if k == 0:
        return (ONE_T,)
    prev1 = _method1_row(k - 1)
    prev2 = _method1_row(k - 2) if k >= 2 else ()

    def c(row, i):
        return row[i] if 0 <= i < len(row) else ZERO_T

    out = [ZERO_T]
    for i in range(1, k + 1):
        acc = T * c(prev1, i - 1)
        alt = ZERO_T
        for m in range(0, k - i):
            term = c(prev2, i + m - 1)
            alt = alt + term if m % 2 == 0 else alt - term
        acc = acc + ONE_MINUS_T * alt
        out.append(acc * Fraction(i, k))
    return tuple(out)


def expansion_method1(k: int) -> BinomialExpansion:
    if k < 1:
        raise ValueError("k must be >= 1")
    return BinomialExpansion(k, _method1_row(k))


def method2_coefficient(i: int, k: int) -> PolyT:
    """c_i(k), 1 <= i <= k-1, from

    binom(k,i) c_i(k) / (1-t) = sum_{m=1}^{i} (-1)^(i-m) f_{m,k} binom(k-m, i-m) <-1, k-m-1>.
    """
    if not 1 <= i <= k - 1:
        raise ValueError("need 1 <= i <= k - 1")
    acc = ZERO_T
    for m in range(1, i + 1):
        term = f_at(m, k) * genbinom_minus_one(k - m - 1) * comb(k - m, i - m)
        acc = acc + term if (i - m) % 2 == 0 else acc - term
    return ONE_MINUS_T * acc * Fraction(1, comb(k, i))


def expansion_method2(k: int) -> BinomialExpansion:
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = [ZERO_T] + [method2_coefficient(i, k) for i in range(1, k)] + [T**k]
    return BinomialExpansion(k, tuple(coeffs))


def expansion_direct(k: int) -> BinomialExpansion:
    """Binomial-basis coordinates of the recurrence value <x, k>."""
    return to_binomial_basis(genbinom_symbolic(k))


def verify_prop_n_nplus1(n: int) -> bool:
    """<n, n+1> / (1-t) == sum_{i=1}^{n} i/(i+1) <n, n-i> <-1, i-1>."""
    lhs, rhs = prop_n_nplus1_sides(n)
    return lhs == rhs


def prop_n_nplus1_sides(n: int) -> tuple[PolyT, PolyT]:
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = exact_divide(genbinom_at(n, n + 1), ONE_MINUS_T)
    rhs = ZERO_T
    for i in range(1, n + 1):
        rhs = rhs + genbinom_at(n, n - i) * genbinom_minus_one(i - 1) * Fraction(i, i + 1)
    return lhs, rhs
