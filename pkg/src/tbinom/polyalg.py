"""Dense exact polynomials in t, and in (x, t).

``PolyT`` is a univariate polynomial with Rational coefficients.  ``PolyXT``
is a polynomial in a first indeterminate (``x`` by default, ``k`` for the
f-table) whose coefficients are ``PolyT`` rows.  Both are immutable and
kept canonical (no trailing zeros), so ``==`` is structural equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from . import kernels
from .numeric import RationalLike, rat, rational_from_json, rational_to_json

NEG_INF = -math.inf
_ZERO = Fraction(0)
_ONE = Fraction(1)


class InexactDivision(ArithmeticError):
    """A claimed exact division left a nonzero remainder."""


def _trim(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class PolyT:
    """Univariate polynomial, coefficients in ascending powers."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[RationalLike] = (), var: str = "t"):
        self.coeffs = _trim([rat(c) for c in coeffs])
        self.var = var

    @classmethod
    def _raw(cls, coeffs, var="t") -> "PolyT":
        # coeffs already Fractions
        p = object.__new__(cls)
        p.coeffs = _trim(list(coeffs))
        p.var = var
        return p

    @classmethod
    def const(cls, c: RationalLike, var: str = "t") -> "PolyT":
        return cls((c,), var)

    @classmethod
    def gen(cls, var: str = "t") -> "PolyT":
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, c: RationalLike, e: int, var: str = "t") -> "PolyT":
        return cls([0] * e + [c], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else _ZERO

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def _coerce(self, other) -> "PolyT":
        if isinstance(other, PolyT):
            if other.var != self.var:
                raise ValueError(f"mixing variables {self.var!r} and {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return PolyT._raw((Fraction(other),), self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyT._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return PolyT._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyT._raw((), self.var)
            return PolyT._raw([c * other for c in self.coeffs], self.var)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return PolyT._raw(kernels.convolve(self.coeffs, o.coeffs), self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (_ONE / other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = PolyT._raw((_ONE,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, PolyT):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __call__(self, v: RationalLike) -> Fraction:
        return kernels.horner(self.coeffs, rat(v))

    def shift(self, c: RationalLike) -> "PolyT":
        """p(var + c)."""
        lin = PolyT._raw((rat(c), _ONE), self.var)
        acc = PolyT._raw((), self.var)
        for a in reversed(self.coeffs):
            acc = acc * lin + a
        return acc

    def __repr__(self):
        return f"PolyT({[str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self):
        return poly_to_text(self.coeffs, self.var)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [rational_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "PolyT":
        coeffs = [rational_from_json(c) for c in data["coeffs"]]
        if coeffs and coeffs[-1] == 0:
            raise ValueError("non-canonical PolyT: trailing zero coefficient")
        return cls._raw(coeffs, data.get("var", "t"))

    def latex(self) -> str:
        return poly_to_latex(self.coeffs, self.var)


T = PolyT.gen("t")
ONE_T = PolyT.const(1)
ZERO_T = PolyT()


def _fmt_power(var: str, e: int, latex: bool) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{{{e}}}" if latex else f"{var}^{e}"


def poly_to_text(coeffs: Sequence[Fraction], var: str) -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _fmt_power(var, e, False)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _latex_abs(a: Fraction) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"


def poly_to_latex(coeffs: Sequence[Fraction], var: str) -> str:
    """Descending powers, e.g. ``-\\frac{1}{3} t^{2} + t``."""
    if not any(coeffs):
        return "0"
    out = ""
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        a = abs(c)
        mono = _fmt_power(var, e, True)
        if not mono:
            body = _latex_abs(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_latex_abs(a)} {mono}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


class PolyXT:
    """Polynomial in ``vars[0]`` whose coefficients are PolyT in ``vars[1]``.

    ``rows[i]`` is the coefficient of ``vars[0]**i``.
    """

    __slots__ = ("rows", "vars")

    def __init__(self, rows: Iterable = (), vars: tuple = ("x", "t")):
        self.vars = tuple(vars)
        conv = []
        for r in rows:
            if isinstance(r, PolyT):
                if r.var != self.vars[1]:
                    r = PolyT._raw(r.coeffs, self.vars[1])
                conv.append(r)
            else:
                conv.append(PolyT(r, self.vars[1]))
        self.rows = _trim(conv)

    @classmethod
    def _raw(cls, rows, vars=("x", "t")) -> "PolyXT":
        p = object.__new__(cls)
        p.rows = _trim(list(rows))
        p.vars = vars
        return p

    @classmethod
    def from_t(cls, p: PolyT, vars=("x", "t")) -> "PolyXT":
        return cls._raw((PolyT._raw(p.coeffs, vars[1]),), vars)

    @classmethod
    def gen(cls, vars=("x", "t")) -> "PolyXT":
        """The first indeterminate itself."""
        return cls._raw((PolyT._raw((), vars[1]), PolyT._raw((_ONE,), vars[1])), vars)

    @classmethod
    def const(cls, c: RationalLike, vars=("x", "t")) -> "PolyXT":
        return cls._raw((PolyT._raw((rat(c),), vars[1]),), vars)

    @property
    def deg_x(self):
        return len(self.rows) - 1 if self.rows else NEG_INF

    @property
    def deg_t(self):
        if not self.rows:
            return NEG_INF
        return max(r.degree for r in self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self):
        return bool(self.rows)

    def row(self, i: int) -> PolyT:
        if 0 <= i < len(self.rows):
            return self.rows[i]
        return PolyT._raw((), self.vars[1])

    def coeff(self, i: int, j: int) -> Fraction:
        return self.row(i)[j]

    def _coerce(self, other):
        if isinstance(other, PolyXT):
            if other.vars != self.vars:
                raise ValueError(f"mixing variables {self.vars} and {other.vars}")
            return other
        if isinstance(other, PolyT):
            return PolyXT.from_t(other, self.vars)
        if isinstance(other, (int, Fraction)):
            return PolyXT.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.rows, o.rows
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, r in enumerate(b):
            out[i] = out[i] + r
        return PolyXT._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return PolyXT._raw([-r for r in self.rows], self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyXT._raw((), self.vars)
            return PolyXT._raw([r * other for r in self.rows], self.vars)
        if isinstance(other, PolyT):
            other = PolyT._raw(other.coeffs, self.vars[1]) if other.var != self.vars[1] else other
            return PolyXT._raw([r * other for r in self.rows], self.vars)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.rows or not o.rows:
            return PolyXT._raw((), self.vars)
        # Kronecker substitution x -> t^width turns this into one convolution
        width = self.deg_t + o.deg_t + 1
        fa = _flatten(self.rows, width)
        fb = _flatten(o.rows, width)
        prod = kernels.convolve(fa, fb)
        rows = [
            PolyT._raw(prod[i * width:(i + 1) * width], self.vars[1])
            for i in range(len(self.rows) + len(o.rows) - 1)
        ]
        return PolyXT._raw(rows, self.vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (_ONE / other)
        return NotImplemented

    def __pow__(self, n: int):
        result = PolyXT.const(1, self.vars)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, PolyXT):
            return self.vars == other.vars and self.rows == other.rows
        if isinstance(other, (int, Fraction, PolyT)):
            o = self._coerce(other)
            return self.rows == o.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, self.rows))

    def shift_x(self, c: RationalLike) -> "PolyXT":
        """Substitute x -> x + c."""
        c = rat(c)
        acc: list = []
        tv = self.vars[1]
        for r in reversed(self.rows):
            # acc <- acc * (x + c) + r
            new = [PolyT._raw((), tv)] * (len(acc) + 1)
            for i, a in enumerate(acc):
                new[i + 1] = new[i + 1] + a
                if c:
                    new[i] = new[i] + a * c
            new[0] = new[0] + r
            acc = new
        return PolyXT._raw(acc, self.vars)

    def eval_x(self, v: RationalLike) -> PolyT:
        """Substitute x := v, leaving a PolyT."""
        v = rat(v)
        tv = self.vars[1]
        if not self.rows:
            return PolyT._raw((), tv)
        width = self.deg_t + 1
        acc = [_ZERO] * width
        for r in reversed(self.rows):
            acc = [a * v for a in acc] if v else [_ZERO] * width
            for j, c in enumerate(r.coeffs):
                acc[j] += c
        return PolyT._raw(acc, tv)

    def eval_t(self, v: RationalLike) -> "PolyXT":
        """Substitute t := v, leaving constant rows."""
        v = rat(v)
        return PolyXT._raw([PolyT._raw((r(v),), self.vars[1]) for r in self.rows], self.vars)

    def __call__(self, xv: RationalLike, tv: RationalLike) -> Fraction:
        return self.eval_x(xv)(tv)

    def as_poly_in_x(self) -> PolyT:
        """For a t-free polynomial, the univariate PolyT in the first variable."""
        if self.deg_t > 0:
            raise ValueError("polynomial depends on t")
        return PolyT._raw([r.constant_term() for r in self.rows], self.vars[0])

    def __repr__(self):
        return f"PolyXT({[str(r) for r in self.rows]!r}, vars={self.vars!r})"

    def __str__(self):
        if not self.rows:
            return "0"
        x = self.vars[0]
        parts = []
        for i in range(len(self.rows) - 1, -1, -1):
            r = self.rows[i]
            if r.is_zero():
                continue
            mono = _fmt_power(x, i, False)
            if not mono:
                parts.append(f"({r})")
            else:
                parts.append(f"({r})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        width = max(self.deg_t + 1, 0) if self.rows else 0
        return {
            "vars": list(self.vars),
            "coeffs": [
                [rational_to_json(r[j]) for j in range(width)] for r in self.rows
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyXT":
        vars = tuple(data.get("vars", ("x", "t")))
        rows = [PolyT._raw([rational_from_json(c) for c in row], vars[1]) for row in data["coeffs"]]
        p = cls._raw(rows, vars)
        if len(p.rows) != len(rows):
            raise ValueError("non-canonical PolyXT: trailing zero row")
        return p


def _flatten(rows: Sequence[PolyT], width: int) -> list:
    out: list = []
    for r in rows:
        cs = r.coeffs
        out.extend(cs)
        out.extend([_ZERO] * (width - len(cs)))
    return out


X = PolyXT.gen(("x", "t"))


# -- exact division ---------------------------------------------------------

Poly = Union[PolyT, PolyXT]


def _divmod_t(p: PolyT, d: PolyT) -> tuple[PolyT, PolyT]:
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dd = d.degree
    lead = d.leading()
    if len(rem) <= dd:
        return PolyT._raw((), p.var), p
    quot = [_ZERO] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        q = c / lead
        quot[i - dd] = q
        for j, dc in enumerate(d.coeffs):
            rem[i - dd + j] -= q * dc
    return PolyT._raw(quot, p.var), PolyT._raw(rem[:dd], p.var)


def poly_divmod(p: PolyT, d: PolyT) -> tuple[PolyT, PolyT]:
    """Euclidean division in Q[t]."""
    return _divmod_t(p, d)


def exact_divide(p: Poly, d: Poly) -> Poly:
    """Quotient ``q`` with ``p == q * d``; InexactDivision otherwise.

    PolyXT dividends accept a PolyT divisor (row by row) or a PolyXT
    divisor (division in the first variable over Q[t]).
    """
    if isinstance(d, (int, Fraction)):
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return p * (_ONE / Fraction(d))
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if isinstance(p, PolyT):
        if isinstance(d, PolyXT):
            if d.deg_x > 0:
                raise InexactDivision(f"{p} is not divisible by {d}")
            d = d.row(0)
        q, r = _divmod_t(p, d)
        if not r.is_zero():
            raise InexactDivision(f"{p} is not divisible by {d} (remainder {r})")
        return q
    if isinstance(d, PolyT):
        return PolyXT._raw([exact_divide(r, d) for r in p.rows], p.vars)
    rem = p
    dx = d.deg_x
    lead = d.rows[-1]
    quot = [PolyT._raw((), p.vars[1])] * max(len(p.rows) - dx, 0)
    while not rem.is_zero():
        shift = rem.deg_x - dx
        if shift < 0:
            raise InexactDivision(f"{p} is not divisible by {d}")
        q = exact_divide(rem.rows[-1], lead)
        quot[shift] = q
        mono = PolyXT._raw([PolyT._raw((), p.vars[1])] * shift + [q], p.vars)
        rem = rem - mono * d
    return PolyXT._raw(quot, p.vars)


# -- binomial basis -----------------------------------------------------------


@dataclass(frozen=True)
class BinomialExpansion:
    """``sum(coeffs[i] * binom(x, i))``; ``coeffs`` indexed from i = 0."""

    k: int
    coeffs: tuple

    def c(self, i: int) -> PolyT:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO_T

    def terms(self):
        """Nonzero (i, c_i) pairs, i ascending."""
        return [(i, c) for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def to_json(self) -> dict:
        return {"k": str(self.k), "terms": [[str(i), c.to_json()] for i, c in self.terms()]}

    @classmethod
    def from_json(cls, data: dict) -> "BinomialExpansion":
        k = int(data["k"])
        if not data["terms"]:
            return cls(k, ())
        coeffs = [ZERO_T] * (k + 1)
        for i, c in data["terms"]:
            coeffs[int(i)] = PolyT.from_json(c)
        return cls(k, tuple(coeffs))

    def latex(self, var: str = "x") -> str:
        return binomial_latex(self, var)


@lru_cache(maxsize=None)
def binom_x(i: int) -> PolyXT:
    """binom(x, i) as a t-free PolyXT."""
    p = PolyXT.const(1)
    for j in range(i):
        p = p * (X - j)
    return p / math.factorial(i)


def to_binomial_basis(p: PolyXT) -> BinomialExpansion:
    """Coefficients c_i with p = sum c_i binom(x, i).

    Solves the unit lower-triangular system p(j) = sum_i binom(j, i) c_i at
    the nodes j = 0..deg_x by forward substitution.
    """
    if p.is_zero():
        return BinomialExpansion(0, ())
    n = p.deg_x
    values = [p.eval_x(j) for j in range(n + 1)]
    coeffs: list = []
    for j in range(n + 1):
        acc = values[j]
        for i in range(j):
            acc = acc - coeffs[i] * math.comb(j, i)
        coeffs.append(acc)
    return BinomialExpansion(n, tuple(coeffs))


def from_binomial_basis(e: BinomialExpansion) -> PolyXT:
    out = PolyXT()
    for i, c in e.terms():
        out = out + binom_x(i) * c
    return out


def binomial_latex(e: BinomialExpansion, var: str = "x") -> str:
    """Binomial-basis rendering, highest binomial first."""
    pieces = []
    for i, c in reversed(e.terms()):
        if i == 0:
            basis = ""
        elif i == 1:
            basis = var
        else:
            basis = f"\\binom{{{var}}}{{{i}}}"
        nz = [j for j, a in enumerate(c.coeffs) if a]
        if len(nz) == 1:
            j = nz[0]
            a = c.coeffs[j]
            mono = _fmt_power(c.var, j, True)
            mag = _latex_abs(abs(a))
            if mono and abs(a) == 1:
                head = mono
            elif mono:
                head = f"{mag} {mono}"
            else:
                head = mag if (abs(a) != 1 or not basis) else ""
            body = " ".join(s for s in (head, basis) if s)
            pieces.append(("-" if a < 0 else "+", body))
        else:
            body = f"\\left({c.latex()}\\right)" + (f" {basis}" if basis else "")
            pieces.append(("+", body))
    if not pieces:
        return "0"
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- identity by interpolation ------------------------------------------------


def grid_counterexample(
    p: Callable[..., Fraction],
    q: Callable[..., Fraction],
    degrees: Sequence[int],
):
    """First integer point of prod(range(d + 1)) where p and q differ, else None."""
    for point in itertools.product(*(range(d + 1) for d in degrees)):
        if p(*point) != q(*point):
            return point
    return None


def poly_equal_on_grid(
    p: Callable[..., Fraction],
    q: Callable[..., Fraction],
    degrees: Sequence[int],
) -> bool:
    """Decide p == q for polynomials whose difference has degree <= degrees[v] in
    each variable v, by exact evaluation on the grid {0..degrees[v]}."""
    return grid_counterexample(p, q, degrees) is None
