"""Pure-Python convolution and evaluation kernels over exact rationals.

Each routine clears denominators once, runs the inner loop on plain
integers and reduces the results at the end.  The compiled module
``_ckernels`` implements the same functions with the same algorithm.
"""

from fractions import Fraction
from math import gcd


def _clear(coeffs):
    """Return (numerators, common_denominator) for a sequence of Fractions."""
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def convolve(a, b, limit=-1):
    """Cauchy product of two coefficient sequences.

    ``limit`` >= 0 truncates the result to ``limit + 1`` entries.
    Returns a list of Fractions; trailing zeros are not stripped.
    """
    na = len(a)
    nb = len(b)
    if na == 0 or nb == 0:
        return []
    n = na + nb - 1
    if 0 <= limit < n - 1:
        n = limit + 1
    ia, da = _clear(a)
    ib, db = _clear(b)
    out = [0] * n
    for i in range(min(na, n)):
        ai = ia[i]
        if ai == 0:
            continue
        stop = min(nb, n - i)
        for j in range(stop):
            out[i + j] += ai * ib[j]
    den = da * db
    return [Fraction(v, den) for v in out]


def horner(coeffs, v):
    """Evaluate sum(coeffs[i] * v**i) exactly at the Fraction ``v``."""
    if not coeffs:
        return Fraction(0)
    ic, dc = _clear(coeffs)
    p = v.numerator
    q = v.denominator
    acc = 0
    qpow = 1
    for c in reversed(ic):
        acc = acc * p + c * qpow
        qpow *= q
    # acc = sum c_i p^i q^(n-i); qpow = q^(n+1)
    return Fraction(acc * q, qpow * dc)


def add_scaled(a, b, s):
    """Return a + s*b coefficientwise (lists of Fractions, padded)."""
    n = max(len(a), len(b))
    out = list(a) + [Fraction(0)] * (n - len(a))
    for i, c in enumerate(b):
        if c:
            out[i] += s * c
    return out
