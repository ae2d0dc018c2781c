"""Exponential-polynomial solutions psi_{r,1^s}, s = 0, 1, 2, of the hook system.

A solution is stored as ``scale * psi = body`` where ``body`` is a finite
sum of PolyT coefficients times e^{iu}:

    s = 0:  (-1)^r r! psi_r
    s = 1:  (-1)^(r+1) (r+1)! psi_{r,1}
    s = 2:  (-1)^r (r+2)! psi_{r,1,1}

Coefficients carrying a 1/(1-t) are produced by certified exact division.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from .genbinom import ONE_MINUS_T, diagonal, genbinom_at, genbinom_minus_one
from .numeric import RationalLike, rat, rational_from_json, rational_to_json
from .polyalg import T, ZERO_T, PolyT, exact_divide, poly_to_latex
from .report import IdentityReport, report


class ExpPoly:
    """sum(terms[i] * e^{i u}) with PolyT coefficients; zero entries dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, PolyT] | None = None):
        clean = {}
        for i, c in (terms or {}).items():
            if not isinstance(c, PolyT):
                c = PolyT.const(c)
            if not c.is_zero():
                clean[int(i)] = c
        self.terms = dict(sorted(clean.items()))

    def coeff(self, i: int) -> PolyT:
        return self.terms.get(i, ZERO_T)

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, ZERO_T) + c
        return ExpPoly(out)

    def __neg__(self):
        return ExpPoly({i: -c for i, c in self.terms.items()})

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExpPoly):
            out: dict = {}
            for i, a in self.terms.items():
                for j, b in other.terms.items():
                    out[i + j] = out.get(i + j, ZERO_T) + a * b
            return ExpPoly(out)
        if isinstance(other, (int, Fraction, PolyT)):
            return ExpPoly({i: c * other for i, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, s):
        return self * (1 / Fraction(s))

    def __pow__(self, n: int) -> "ExpPoly":
        out = ExpPoly({0: PolyT.const(1)})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, ExpPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def at_zero(self) -> PolyT:
        """Value at u = 0: the sum of all coefficients."""
        acc = ZERO_T
        for c in self.terms.values():
            acc = acc + c
        return acc

    def eval_t(self, v: RationalLike) -> "ExpPoly":
        v = rat(v)
        return ExpPoly({i: PolyT.const(c(v)) for i, c in self.terms.items()})

    def __repr__(self):
        return "ExpPoly({" + ", ".join(f"{i}: {c}" for i, c in self.terms.items()) + "})"

    def to_json(self) -> dict:
        return {str(i): c.to_json() for i, c in self.terms.items()}

    @classmethod
    def from_json(cls, data: Mapping) -> "ExpPoly":
        return cls({int(i): PolyT.from_json(c) for i, c in data.items()})

    def latex(self) -> str:
        """Descending exponents, e.g. ``-t e^{2u} + 2t e^{u} - t``."""
        if not self.terms:
            return "0"
        out = ""
        for i in sorted(self.terms, reverse=True):
            c = self.terms[i]
            if i == 0:
                exp = ""
            elif i == 1:
                exp = "e^{u}"
            elif i == -1:
                exp = "e^{-u}"
            else:
                exp = f"e^{{{i}u}}"
            nz = [j for j, a in enumerate(c.coeffs) if a]
            if len(nz) == 1:
                text = poly_to_latex(c.coeffs, c.var)
                neg = text.startswith("-")
                mag = text[1:] if neg else text
                if exp and mag == "1":
                    mag = ""
                body = f"{mag} {exp}".strip()
            else:
                neg = False
                body = f"\\left({c.latex()}\\right)" + (f" {exp}" if exp else "")
            if not out:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out


def exp_poly_derivative(p: ExpPoly) -> ExpPoly:
    return ExpPoly({i: c * i for i, c in p.terms.items()})


ZERO_EXP = ExpPoly()


class HookSolution:
    """``scale * psi_{r,1^s}(u) == body``."""

    __slots__ = ("r", "s", "scale", "body")

    def __init__(self, r: int, s: int, scale: Fraction, body: ExpPoly):
        self.r = r
        self.s = s
        self.scale = Fraction(scale)
        self.body = body

    @property
    def psi(self) -> ExpPoly:
        """The function itself, body / scale."""
        return self.body / self.scale

    def label(self) -> str:
        return {0: f"{self.r}", 1: f"{self.r},1", 2: f"{self.r},1^2"}[self.s]

    def __eq__(self, other):
        if isinstance(other, HookSolution):
            return (self.r, self.s, self.scale, self.body) == (
                other.r, other.s, other.scale, other.body)
        return NotImplemented

    def __repr__(self):
        return f"HookSolution(r={self.r}, s={self.s}, scale={self.scale}, body={self.body!r})"

    def to_json(self) -> dict:
        return {
            "r": str(self.r),
            "s": str(self.s),
            "scale": rational_to_json(self.scale),
            "terms": self.body.to_json(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HookSolution":
        return cls(
            int(data["r"]),
            int(data["s"]),
            rational_from_json(data["scale"]),
            ExpPoly.from_json(data["terms"]),
        )

    def latex(self) -> str:
        sc = self.scale
        if sc == 1:
            head = ""
        elif sc == -1:
            head = "-"
        else:
            head = str(sc)
        label = self.label()
        sub = label if len(label) == 1 else f"{{{label}}}"
        return f"{head}\\psi_{sub} = {self.body.latex()}"


def _g(n: int, k: int) -> PolyT:
    return genbinom_at(n, k)


def _m1(k: int) -> PolyT:
    return genbinom_minus_one(k)


@lru_cache(maxsize=None)
def psi_r(r: int) -> HookSolution:
    """(-1)^r r! psi_r = sum_{i=1}^{r-1} <r-1, r-i-1> <-1, i-1> e^{iu} - <r-2, r-2>."""
    if r < 1:
        raise ValueError("r must be >= 1")
    terms = {i: _g(r - 1, r - i - 1) * _m1(i - 1) for i in range(1, r)}
    if r >= 2:
        terms[0] = -diagonal(r - 2)
    return HookSolution(r, 0, Fraction((-1) ** r * factorial(r)), ExpPoly(terms))


@lru_cache(maxsize=None)
def psi_r1(r: int) -> HookSolution:
    """(-1)^(r+1) (r+1)! psi_{r,1} =
    sum_{i=1}^{r-1} (r-i)/(i+1) <r, r-i> <-1, i-1> e^{iu} - r <r-1, r-1>
    + (r+1)/(1-t) <r, r+1> e^{-u}."""
    if r < 1:
        raise ValueError("r must be >= 1")
    terms = {
        i: _g(r, r - i) * _m1(i - 1) * Fraction(r - i, i + 1) for i in range(1, r)
    }
    terms[0] = -diagonal(r - 1) * r
    terms[-1] = exact_divide(_g(r, r + 1), ONE_MINUS_T) * (r + 1)
    return HookSolution(r, 1, Fraction((-1) ** (r + 1) * factorial(r + 1)), ExpPoly(terms))


def _psi_r11_terms(r: int, interior_sign: int) -> dict:
    terms = {}
    for i in range(1, r):
        first = _g(r + 1, r - i + 1) * Fraction((r - i) * (r - i + 1), (i + 1) * (i + 2))
        second = ONE_MINUS_T * _g(r - 1, r - i - 1) * Fraction(
            i * (r + 1) * (r + 2), 2 * (i + 1) * (i + 2))
        terms[i] = (first + second * interior_sign) * _m1(i - 1)
    b2 = comb(r + 2, 2)
    terms[0] = -diagonal(r) * comb(r + 1, 2)
    terms[-1] = (exact_divide(_g(r + 1, r + 2), ONE_MINUS_T) * 2 - _g(r - 1, r)) * b2
    terms[-2] = exact_divide(_g(r, r + 2), ONE_MINUS_T) * b2
    return terms


@lru_cache(maxsize=None)
def psi_r11(r: int) -> HookSolution:
    """(-1)^r (r+2)! psi_{r,1,1} =
      sum_{i=1}^{r-1} ((r-i)(r-i+1)/((i+1)(i+2)) <r+1, r-i+1>
                       + (1-t) i(r+1)(r+2)/(2(i+1)(i+2)) <r-1, r-i-1>) <-1, i-1> e^{iu}
      - binom(r+1, 2) <r, r>
      + binom(r+2, 2) (2/(1-t) <r+1, r+2> e^{-u} - <r-1, r> e^{-u} + 1/(1-t) <r, r+2> e^{-2u}).

    The interior (1-t) term enters with a plus sign; this is the sign forced
    by the coefficient recurrence of the defining equation
    (see ``psi_r11_minus_variant`` for the other sign, which fails it).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return HookSolution(r, 2, Fraction((-1) ** r * factorial(r + 2)), ExpPoly(_psi_r11_terms(r, 1)))


def psi_r11_minus_variant(r: int) -> HookSolution:
    """Same closed form with a minus sign on the interior (1-t) term."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return HookSolution(r, 2, Fraction((-1) ** r * factorial(r + 2)), ExpPoly(_psi_r11_terms(r, -1)))


def hook_solution(r: int, s: int) -> HookSolution:
    if s not in (0, 1, 2):
        raise ValueError("s must be 0, 1 or 2")
    return (psi_r, psi_r1, psi_r11)[s](r)


# The empty partition psi_0 enters the psi_{r+1} and psi_{r,1} equations at r = 1 only, always
# multiplied by (1 - t).  Matching the golden values psi_1 = 0 and
# 2 psi_2 = e^u - 1 forces (1 - t) psi_0 = -1; both equations agree on it.
ONE_MINUS_T_PSI_EMPTY = ExpPoly({0: PolyT.const(-1)})


def _psi(r: int) -> ExpPoly:
    return psi_r(r).psi if r >= 1 else ZERO_EXP


def _psi1(r: int) -> ExpPoly:
    return psi_r1(r).psi if r >= 1 else ZERO_EXP


def _one_minus_t_psi(r: int) -> ExpPoly:
    """(1 - t) psi_r, with the empty-partition convention at r = 0."""
    if r == 0:
        return ONE_MINUS_T_PSI_EMPTY
    return _psi(r) * ONE_MINUS_T


def system_s0_sides(r: int, flip_sign: bool = False) -> tuple[ExpPoly, ExpPoly]:
    """(r+1) psi'_{r+1}  vs  r(r+1) psi_{r+1} + t r psi_r - (1-t) psi_{r-1}."""
    nxt = _psi(r + 1)
    lhs = exp_poly_derivative(nxt) * (r + 1)
    tail = _one_minus_t_psi(r - 1)
    rhs = nxt * (r * (r + 1)) + _psi(r) * (T * r) + (tail if flip_sign else -tail)
    return lhs, rhs


def system_s1_sides(r: int, flip_sign: bool = False) -> tuple[ExpPoly, ExpPoly]:
    """(r+1) psi'_{r,1}  vs  -(r+1) psi_{r,1} - t r psi_r + (1-t) psi_{r-1}."""
    p1 = _psi1(r)
    lhs = exp_poly_derivative(p1) * (r + 1)
    tail = _one_minus_t_psi(r - 1)
    rhs = p1 * (-(r + 1)) - _psi(r) * (T * r) + (-tail if flip_sign else tail)
    return lhs, rhs


def system_s2_sides(r: int, flip_sign: bool = False) -> tuple[ExpPoly, ExpPoly]:
    """r psi'_{r+1,1} - 2 psi'_{r,1,1}  vs
    r^2 psi_{r+1,1} + 4 psi_{r,1,1} + t(r+1) psi_{r,1} - (1-t)(psi_{r-1,1} + psi_r)."""
    a = _psi1(r + 1)
    c = psi_r11(r).psi
    lhs = exp_poly_derivative(a) * r - exp_poly_derivative(c) * 2
    tail = (_psi1(r - 1) + _psi(r)) * ONE_MINUS_T
    rhs = a * (r * r) + c * 4 + _psi1(r) * (T * (r + 1)) + (tail if flip_sign else -tail)
    return lhs, rhs


def verify_system_s0(r: int, flip_sign: bool = False) -> IdentityReport:
    lhs, rhs = system_s0_sides(r, flip_sign)
    return report("psi_s0", {"r": r}, lhs, rhs, equation="(r+1)psi'_{r+1} = ...")


def verify_system_s1(r: int, flip_sign: bool = False) -> IdentityReport:
    lhs, rhs = system_s1_sides(r, flip_sign)
    return report("psi_s1", {"r": r}, lhs, rhs, equation="(r+1)psi'_{r,1} = ...")


def verify_system_s2(r: int, flip_sign: bool = False) -> IdentityReport:
    lhs, rhs = system_s2_sides(r, flip_sign)
    return report("psi_s2", {"r": r}, lhs, rhs, equation="r psi'_{r+1,1} - 2 psi'_{r,1^2} = ...")


def verify_initial_condition(r: int, s: int) -> IdentityReport:
    sol = hook_solution(r, s)
    return report("psi_init", {"r": r, "s": s}, sol.body.at_zero(), ZERO_T)


def t1_closed_form(r: int, s: int) -> ExpPoly:
    """(e^u - 1)^(r-1) (e^-u - 1)^s / (r+s)!."""
    up = ExpPoly({1: PolyT.const(1), 0: PolyT.const(-1)})
    down = ExpPoly({-1: PolyT.const(1), 0: PolyT.const(-1)})
    return (up ** (r - 1)) * (down ** s) / factorial(r + s)


def t1_binomial_form(r: int, s: int) -> ExpPoly:
    """sum_{i=-s}^{r-1} (-1)^(r+s+i-1) binom(r+s-1, r-i-1) e^{iu} / (r+s)!."""
    terms = {
        i: PolyT.const(Fraction((-1) ** (r + s + i - 1) * comb(r + s - 1, r - i - 1),
                                factorial(r + s)))
        for i in range(-s, r)
    }
    return ExpPoly(terms)


def verify_t1(r: int, s: int) -> IdentityReport:
    psi = hook_solution(r, s).psi.eval_t(1)
    return report("psi_t1", {"r": r, "s": s}, psi, t1_closed_form(r, s))


# -- coefficient recurrences from the construction --------------------------


def a_coeff(r: int, i: int) -> PolyT:
    return psi_r(r).body.coeff(i) if r >= 1 else ZERO_T


def b_coeff(r: int, i: int) -> PolyT:
    return psi_r1(r).body.coeff(i) if r >= 1 else ZERO_T


def c_coeff(r: int, i: int) -> PolyT:
    return psi_r11(r).body.coeff(i)


def a_recurrence_sides(r: int, i: int) -> tuple[PolyT, PolyT]:
    """((r-i-1)/(r-1)) a_i^(r)  vs  t a_i^(r-1) + (1-t) a_i^(r-2)."""
    lhs = a_coeff(r, i) * Fraction(r - i - 1, r - 1)
    rhs = T * a_coeff(r - 1, i) + ONE_MINUS_T * a_coeff(r - 2, i)
    return lhs, rhs


def b_recurrence_sides(r: int, i: int) -> tuple[PolyT, PolyT]:
    """(i+1) b_i^(r)  vs  r (t a_i^(r) + (1-t) a_i^(r-1))."""
    lhs = b_coeff(r, i) * (i + 1)
    rhs = (T * a_coeff(r, i) + ONE_MINUS_T * a_coeff(r - 1, i)) * r
    return lhs, rhs


def c_recurrence_sides(r: int, i: int) -> tuple[PolyT, PolyT]:
    """-2(i+2) c_i^(r)  vs
    r(r-i) b_i^(r+1) - (r+1)(r+2)(t b_i^(r) + (1-t)(b_i^(r-1) + a_i^(r)))."""
    lhs = c_coeff(r, i) * (-2 * (i + 2))
    inner = T * b_coeff(r, i) + ONE_MINUS_T * (b_coeff(r - 1, i) + a_coeff(r, i))
    rhs = b_coeff(r + 1, i) * (r * (r - i)) - inner * ((r + 1) * (r + 2))
    return lhs, rhs
