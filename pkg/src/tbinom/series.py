"""Truncated power series in u with PolyT coefficients.

Every series carries its truncation order explicitly; binary operations
truncate to the smaller order of their operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from . import kernels
from .polyalg import ONE_T, T, ZERO_T, PolyT, PolyXT, _flatten


class NonUnitConstantTerm(ArithmeticError):
    """Constant term is not a nonzero rational."""


class ConstantTermNotOne(ArithmeticError):
    """log and symbolic powers need constant term exactly 1."""


class TruncSeries:
    """sum(coeffs[n] * u**n) + O(u**(order + 1))."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [c if isinstance(c, PolyT) else PolyT.const(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend([ZERO_T] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([ONE_T], order)

    @classmethod
    def u(cls, order: int) -> "TruncSeries":
        return cls([ZERO_T, ONE_T], order)

    def __getitem__(self, n: int) -> PolyT:
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot raise truncation order")
        return TruncSeries(self.coeffs[: order + 1], order)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction, PolyT)):
            return TruncSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncSeries([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PolyT)):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c.is_zero() for c in self.coeffs[1:])

    def __repr__(self):
        return f"TruncSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"

    def to_json(self) -> dict:
        return {"var": "u", "order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncSeries":
        coeffs = [PolyT.from_json(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("coefficient count does not match order")
        return cls(coeffs, data["order"])


def _gh_product(k: int, start: int) -> PolyT:
    """prod_{i=start}^{k'} (k' - i + 1 + (t - 1) i) with k' = k; start is 0 or 1."""
    p = ONE_T
    for i in range(start, k + 1):
        p = p * PolyT((k - i + 1 - i, i))
    return p


def series_G(N: int) -> TruncSeries:
    """G(u) = 1 + t u + (1-t) sum_k (-u)^(k+2)/(k+2)! prod_{i=0}^{k} (k-i+1+(t-1)i)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    coeffs = [ONE_T, T]
    one_minus_t = 1 - T
    for k in range(0, N - 1):
        sign = 1 if k % 2 == 0 else -1
        coeffs.append(one_minus_t * _gh_product(k, 0) * Fraction(sign, factorial(k + 2)))
    return TruncSeries(coeffs[: N + 1], N)


def series_H(N: int) -> TruncSeries:
    """H(u) = 1 + sum_{k>=1} (-u)^k/k! prod_{i=1}^{k} (k-i+1+(t-1)i)."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    coeffs = [ONE_T]
    for k in range(1, N + 1):
        coeffs.append(_gh_product(k, 1) * Fraction((-1) ** k, factorial(k)))
    return TruncSeries(coeffs, N)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated at min(a.order, b.order)."""
    n = min(a.order, b.order)
    da = max((c.degree for c in a.coeffs[: n + 1] if c.coeffs), default=0)
    db = max((c.degree for c in b.coeffs[: n + 1] if c.coeffs), default=0)
    # Kronecker substitution u -> t^width: one flat convolution
    width = da + db + 1
    prod = kernels.convolve(
        _flatten(a.coeffs[: n + 1], width), _flatten(b.coeffs[: n + 1], width), (n + 1) * width - 1
    )
    prod.extend([Fraction(0)] * ((n + 1) * width - len(prod)))
    return TruncSeries([PolyT._raw(prod[i * width:(i + 1) * width]) for i in range(n + 1)], n)


def series_inverse(a: TruncSeries) -> TruncSeries:
    """b with a*b = 1 + O(u^(order+1)); the constant term must be a nonzero rational."""
    a0 = a.coeffs[0]
    if a0.is_zero() or not a0.is_constant():
        raise NonUnitConstantTerm(f"constant term {a0} is not a nonzero rational")
    inv0 = 1 / a0.constant_term()
    b = [PolyT.const(inv0)]
    for n in range(1, a.order + 1):
        acc = ZERO_T
        for j in range(1, n + 1):
            if not a.coeffs[j].is_zero():
                acc = acc + a.coeffs[j] * b[n - j]
        b.append(acc * (-inv0))
    return TruncSeries(b, a.order)


def series_derivative(a: TruncSeries) -> TruncSeries:
    if a.order < 1:
        raise ValueError("derivative needs order >= 1")
    return TruncSeries([a.coeffs[n] * n for n in range(1, a.order + 1)], a.order - 1)


def solve_ode_G(N: int) -> TruncSeries:
    """Series solution of G G' = t G + (1-t) u with G(0) = 1.

    (n+1) g_{n+1} = t g_n + (1-t)[n=1] - sum_{j=0}^{n-1} (j+1) g_{j+1} g_{n-j}
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    g = [ONE_T]
    one_minus_t = 1 - T
    for n in range(0, N):
        acc = T * g[n]
        if n == 1:
            acc = acc + one_minus_t
        for j in range(0, n):
            acc = acc - g[j + 1] * g[n - j] * (j + 1)
        g.append(acc * Fraction(1, n + 1))
    return TruncSeries(g, N)


def series_pow_int(a: TruncSeries, n: int) -> TruncSeries:
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = TruncSeries.one(a.order)
    base = a
    while n:
        if n & 1:
            result = series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def series_log(a: TruncSeries) -> TruncSeries:
    """L with L' = a'/a and L(0) = 0."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne(f"constant term is {a.coeffs[0]}")
    if a.order == 0:
        return TruncSeries([ZERO_T], 0)
    dlog = series_mul(series_derivative(a), series_inverse(a.truncate(a.order - 1)))
    coeffs = [ZERO_T] + [dlog.coeffs[n - 1] * Fraction(1, n) for n in range(1, a.order + 1)]
    return TruncSeries(coeffs, a.order)


def series_pow_symbolic(a: TruncSeries, N: int | None = None) -> list[PolyXT]:
    """Coefficients of a(u)**x as PolyXT in (x, t), for u^0..u^N.

    E(0) = 1 and E' = x L' E with L = log a, i.e.
    (n+1) E_{n+1} = x * sum_{j=0}^{n} (j+1) L_{j+1} E_{n-j}.
    """
    if N is None:
        N = a.order
    if N > a.order:
        raise ValueError("N exceeds the truncation order")
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne(f"constant term is {a.coeffs[0]}")
    L = series_log(a.truncate(N))
    dL = [L.coeffs[j + 1] * (j + 1) for j in range(N)]
    x = PolyXT.gen()
    E = [PolyXT.const(1)]
    for n in range(N):
        acc = PolyXT()
        for j in range(n + 1):
            if not dL[j].is_zero():
                acc = acc + E[n - j] * dL[j]
        E.append(x * acc * Fraction(1, n + 1))
    return E


def coefficient_product(k: int, start: int) -> PolyT:
    """The product prod_{i=start}^{k} (k - i + 1 + (t-1) i) used by G and H."""
    return _gh_product(k, start)
