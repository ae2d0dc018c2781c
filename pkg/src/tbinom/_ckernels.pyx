# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same algorithm, same results."""

from fractions import Fraction
from math import gcd


cdef tuple _clear(object coeffs):
    cdef object den = 1
    cdef object d
    cdef list out
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    if den == 1:
        out = [c.numerator for c in coeffs]
    else:
        out = [c.numerator * (den // c.denominator) for c in coeffs]
    return out, den


def convolve(a, b, Py_ssize_t limit=-1):
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t n, i, j, stop
    cdef list ia, ib, out
    cdef object da, db, ai, den
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
            out[i + j] = out[i + j] + ai * ib[j]
    den = da * db
    return [Fraction(v, den) for v in out]


def horner(coeffs, v):
    cdef list ic
    cdef object dc, p, q, acc, qpow
    if not coeffs:
        return Fraction(0)
    ic, dc = _clear(coeffs)
    p = v.numerator
    q = v.denominator
    acc = 0
    qpow = 1
    for c in reversed(ic):
        acc = acc * p + c * qpow
        qpow = qpow * q
    return Fraction(acc * q, qpow * dc)


def add_scaled(a, b, s):
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef Py_ssize_t i
    cdef list out = list(a) + [Fraction(0)] * (n - len(a))
    for i in range(len(b)):
        c = b[i]
        if c:
            out[i] = out[i] + s * c
    return out
