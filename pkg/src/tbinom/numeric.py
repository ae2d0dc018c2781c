"""Exact rational scalars.

``Rational`` is :class:`fractions.Fraction`: always reduced, positive
denominator, zero stored as 0/1.  The helpers below add the few operations
the rest of the package needs on top of it, plus the JSON wire form
``["numerator", "denominator"]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class DivisionByZero(ZeroDivisionError):
    """Raised by :func:`rat_div` for a zero divisor."""


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or string such as ``"-7/3"`` to a Rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean value {value!r}")
    return Fraction(value)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise DivisionByZero(f"{a} / 0")
    return a / b


def falling_factorial(z: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= z - i
    return out


def binom_rational(z: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient z(z-1)...(z-k+1)/k! at rational z."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return falling_factorial(rat(z), k) / factorial(k)


def rational_to_json(q: Fraction) -> list[str]:
    return [str(q.numerator), str(q.denominator)]


def rational_from_json(data) -> Fraction:
    num, den = data
    den = int(den)
    if den <= 0:
        raise ValueError("denominator must be positive")
    q = Fraction(int(num), den)
    if q.denominator != den:
        raise ValueError(f"non-canonical rational {data!r}")
    return q


def format_rational(q: Fraction) -> str:
    return str(q)
