"""Named, parameterized exact checks of the identities satisfied by <x, k>.

Every ``check_*`` returns an :class:`IdentityReport`.  Checks that have a
negative control accept ``mutation=`` with one of the names listed in
``MUTATIONS``; a mutated check must come back false.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

from . import hookpsi
from .genbinom import (
    ONE_MINUS_T,
    diagonal,
    expansion_direct,
    expansion_method1,
    expansion_method2,
    f_at,
    genbinom_at,
    genbinom_minus_one,
    genbinom_symbolic,
    prop_n_nplus1_sides,
    relation_41_sides,
)
from .numeric import RationalLike, binom_rational, rat
from .polyalg import (
    T,
    ZERO_T,
    InexactDivision,
    PolyT,
    PolyXT,
    binom_x,
    exact_divide,
    from_binomial_basis,
    grid_counterexample,
    to_binomial_basis,
)
from .report import IdentityReport, report
from .series import (
    TruncSeries,
    coefficient_product,
    series_derivative,
    series_G,
    series_H,
    series_mul,
    series_pow_int,
    series_pow_symbolic,
    solve_ode_G,
)


class UnknownIdentity(KeyError):
    pass


class PoleInSummand(ZeroDivisionError):
    pass


MUTATIONS = {
    "thm1": "flip_h3",
    "rothe": "drop_prefactor",
    "thm2": "perturb_g2",
    "cor3": "drop_i0",
    "cor4": "drop_weight",
    "cor5": "shift_index",
    "pascal_down": "drop_last",
    "pascal_up": "drop_last",
    "diag": "wrong_power",
    "rel41": "shift_f",
    "prop_n_n1": "drop_weight",
    "expansion": "method1_c0_one",
    "psi_s0": "flip_sign",
    "psi_s1": "flip_sign",
    "psi_s2": "interior_minus",
}


def _check_mutation(identity_id: str, mutation: str | None):
    if mutation is not None and MUTATIONS.get(identity_id) != mutation:
        raise ValueError(f"unknown mutation {mutation!r} for {identity_id}")


# -- series ------------------------------------------------------------------


def check_theorem1(N: int, mutation: str | None = None) -> IdentityReport:
    """G(u) H(u) == 1 to order N."""
    _check_mutation("thm1", mutation)
    G = series_G(N)
    H = series_H(N)
    if mutation == "flip_h3" and N >= 3:
        cs = list(H.coeffs)
        cs[3] = -cs[3]
        H = TruncSeries(cs, N)
    prod = series_mul(G, H)
    r = report("thm1", {"order": N}, prod, TruncSeries.one(N))
    if not r.holds:
        r.details["first_nonzero"] = next(
            n for n in range(N + 1) if prod.coeffs[n] != (1 if n == 0 else 0))
    return r


def check_G_derivative(N: int) -> IdentityReport:
    """dG/du == t + (1-t) u H to order N-1."""
    lhs = series_derivative(series_G(N))
    uH = TruncSeries([ZERO_T] + list(series_H(N).coeffs), N).truncate(N - 1)
    rhs = uH * ONE_MINUS_T + T
    return report("thm1_deriv", {"order": N - 1}, lhs, rhs)


def check_ode_solution(N: int) -> IdentityReport:
    """The ODE G G' = t G + (1-t) u, G(0) = 1 reproduces G."""
    return report("cor1", {"order": N}, solve_ode_G(N), series_G(N))


def check_xy_coefficients(t: RationalLike, N: int) -> IdentityReport:
    """Rewritten coefficients at a rational t != 2, with X_k = -(k+1)/(t-2), Y_k = X_{k-2}:

    [u^k] G = (1-t)/(2-t) (t-2)^k binom(Y_k+1, k)/(Y_k+1)  (k >= 2)
    [u^k] H = (t-2)^k binom(X_k - 1, k).
    """
    t = rat(t)
    G = series_G(N)
    H = series_H(N)
    lhs, rhs = [], []
    for k in range(N + 1):
        X = -Fraction(k + 1) / (t - 2)
        lhs.append(H.coeffs[k](t))
        rhs.append((t - 2) ** k * binom_rational(X - 1, k))
        if k >= 2:
            Y1 = -Fraction(k - 1) / (t - 2) + 1
            lhs.append(G.coeffs[k](t))
            # binom(z, k)/z == binom(z-1, k-1)/k also covers z = 0
            ratio = binom_rational(Y1 - 1, k - 1) / k
            rhs.append((1 - t) / (2 - t) * (t - 2) ** k * ratio)
    return report("thm1_xy", {"t": t, "order": N}, lhs, rhs)


def rothe_summand(A: Fraction, B: Fraction, C: Fraction, n: int, k: int,
                  regularize: bool = False) -> Fraction:
    """A/(A+Bk) binom(A+Bk, k) binom(C-Bk, n-k).

    With ``regularize`` a vanishing A+Bk (k >= 1) is handled through
    binom(z, k)/z = binom(z-1, k-1)/k, the removable-singularity value.
    """
    z = A + B * k
    tail = binom_rational(C - B * k, n - k)
    if z == 0:
        if not regularize or k == 0:
            raise PoleInSummand(f"A + B*{k} = 0")
        return A / k * binom_rational(z - 1, k - 1) * tail
    return A / z * binom_rational(z, k) * tail


def check_rothe(A: RationalLike, B: RationalLike, C: RationalLike, n: int,
                regularize: bool = False, mutation: str | None = None) -> IdentityReport:
    """sum_{k=0}^{n} A/(A+Bk) binom(A+Bk, k) binom(C-Bk, n-k) == binom(A+C, n)."""
    _check_mutation("rothe", mutation)
    A, B, C = rat(A), rat(B), rat(C)
    if mutation == "drop_prefactor":
        lhs = sum((binom_rational(A + B * k, k) * binom_rational(C - B * k, n - k)
                   for k in range(n + 1)), Fraction(0))
    else:
        lhs = sum((rothe_summand(A, B, C, n, k, regularize) for k in range(n + 1)),
                  Fraction(0))
    return report("rothe", {"A": A, "B": B, "C": C, "n": n}, lhs, binom_rational(A + C, n))


def rothe_parameters(t: RationalLike, n: int) -> tuple[Fraction, Fraction, Fraction]:
    t = rat(t)
    if t == 2:
        raise ValueError("t = 2 is excluded")
    A = 1 + 1 / (t - 2)
    B = -1 / (t - 2)
    C = -1 - Fraction(n + 1) / (t - 2)
    return A, B, C


def check_rothe_parameterized(t: RationalLike, n: int) -> IdentityReport:
    A, B, C = rothe_parameters(t, n)
    r = check_rothe(A, B, C, n, regularize=True)
    r.parameters = {"t": rat(t), "n": n}
    return r


# -- generating function -----------------------------------------------------


def check_theorem2(n: int, N: int, mutation: str | None = None) -> IdentityReport:
    """[u^k] G^n == <n, k> for k <= N."""
    _check_mutation("thm2", mutation)
    G = series_G(N)
    if mutation == "perturb_g2" and N >= 2:
        cs = list(G.coeffs)
        cs[2] = cs[2] + T
        G = TruncSeries(cs, N)
    power = series_pow_int(G, n)
    expected = TruncSeries([genbinom_at(n, k) for k in range(N + 1)], N)
    return report("thm2", {"n": n, "order": N}, power, expected)


def check_symbolic_power(K: int) -> IdentityReport:
    """Coefficients of G^x, computed via log/exp, equal the recurrence <x, k>."""
    sym = series_pow_symbolic(series_G(K), K)
    rec = [genbinom_symbolic(k) for k in range(K + 1)]
    return report("thm2_sym", {"max_k": K}, sym, rec)


def check_minus_one(k: int) -> IdentityReport:
    return report("cor2", {"k": k}, genbinom_minus_one(k), genbinom_at(-1, k))


# -- convolution identities by grid evaluation --------------------------------


@lru_cache(maxsize=None)
def _value(x: int, t: int, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    return genbinom_at(x, k)(t)


def _degree_report(k: int, bounds: tuple, extra_x: int = 0) -> dict:
    # actual degrees of the operands, each variable separately
    deg_x = max(genbinom_symbolic(i).deg_x for i in range(k + 1)) + extra_x
    deg_t = max(genbinom_symbolic(i).deg_t + genbinom_symbolic(k - i).deg_t
                for i in range(k + 1))
    deg_t = max(deg_t, genbinom_symbolic(k).deg_t)
    actual = (deg_x, deg_x, deg_t)
    return {"degree_bounds": list(bounds), "operand_degrees": list(actual),
            "bounds_dominate": all(a <= b for a, b in zip(actual, bounds))}


def check_chu_vandermonde(k: int, mutation: str | None = None) -> IdentityReport:
    """sum_i <x, i><y, k-i> == <x+y, k>, proved on the grid {0..k}^3 in (x, y, t)."""
    _check_mutation("cor3", mutation)
    start = 1 if mutation == "drop_i0" else 0

    def lhs(x, y, t):
        return sum((_value(x, t, i) * _value(y, t, k - i) for i in range(start, k + 1)),
                   Fraction(0))

    def rhs(x, y, t):
        return _value(x + y, t, k)

    bounds = (k, k, k)
    details = _degree_report(k, bounds)
    bad = grid_counterexample(lhs, rhs, bounds)
    holds = bad is None and details["bounds_dominate"]
    if bad is not None:
        details["counterexample"] = {"x": bad[0], "y": bad[1], "t": bad[2]}
    return IdentityReport("cor3", {"k": k}, holds,
                          None if holds else (lhs(*bad) if bad else None),
                          None if holds else (rhs(*bad) if bad else None), details)


def check_chu_vandermonde_weighted(k: int, mutation: str | None = None) -> IdentityReport:
    """(x+y) sum_i i <x, i><y, k-i> == k x <x+y, k>, grid degrees (k+1, k+1, k)."""
    _check_mutation("cor4", mutation)

    def weight(i):
        return 1 if mutation == "drop_weight" else i

    def lhs(x, y, t):
        return (x + y) * sum((weight(i) * _value(x, t, i) * _value(y, t, k - i)
                              for i in range(k + 1)), Fraction(0))

    def rhs(x, y, t):
        return k * x * _value(x + y, t, k)

    bounds = (k + 1, k + 1, k)
    details = _degree_report(k, bounds, extra_x=1)
    bad = grid_counterexample(lhs, rhs, bounds)
    holds = bad is None and details["bounds_dominate"]
    if bad is not None:
        details["counterexample"] = {"x": bad[0], "y": bad[1], "t": bad[2]}
    return IdentityReport("cor4", {"k": k}, holds,
                          None if holds else (lhs(*bad) if bad else None),
                          None if holds else (rhs(*bad) if bad else None), details)


def check_corollary5(n: int, mutation: str | None = None) -> IdentityReport:
    """sum_{i=0}^{n} i <n, n-i><-1, i-1> == 0 (the i = 0 term is zero)."""
    _check_mutation("cor5", mutation)
    offset = 0 if mutation == "shift_index" else 1
    total = ZERO_T
    for i in range(1, n + 1):
        total = total + genbinom_at(n, n - i) * genbinom_minus_one(i - offset) * i
    return report("cor5", {"n": n}, total, ZERO_T)


# -- Pascal-type recurrences ---------------------------------------------------


def check_pascal_down(m: int, mutation: str | None = None) -> IdentityReport:
    """<x,m> - <x-1,m> == t<x-1,m-1> + (1-t) sum_{k=0}^{m-2} (-1)^k/(k+2)! <x-1,m-k-2> prod_{i=0}^{k}(...)."""
    _check_mutation("pascal_down", mutation)
    g = genbinom_symbolic
    lhs = g(m) - g(m).shift_x(-1)
    rhs = g(m - 1).shift_x(-1) * T if m >= 1 else PolyXT()
    last = m - 2 if mutation != "drop_last" else m - 3
    acc = PolyXT()
    for k in range(0, last + 1):
        coeff = coefficient_product(k, 0) * Fraction((-1) ** k, factorial(k + 2))
        acc = acc + g(m - k - 2).shift_x(-1) * coeff
    rhs = rhs + acc * ONE_MINUS_T
    return report("pascal_down", {"m": m}, lhs, rhs)


def check_pascal_up(m: int, mutation: str | None = None) -> IdentityReport:
    """<x,m> - <x+1,m> == sum_{k=1}^{m} (-1)^k/k! <x+1,m-k> prod_{i=1}^{k}(...)."""
    _check_mutation("pascal_up", mutation)
    g = genbinom_symbolic
    lhs = g(m) - g(m).shift_x(1)
    last = m if mutation != "drop_last" else m - 1
    rhs = PolyXT()
    for k in range(1, last + 1):
        coeff = coefficient_product(k, 1) * Fraction((-1) ** k, factorial(k))
        rhs = rhs + g(m - k).shift_x(1) * coeff
    return report("pascal_up", {"m": m}, lhs, rhs)


# -- diagonal, divisibility, the f relation, <n, n+1> ------------------------------


def check_diagonal(n: int, mutation: str | None = None) -> IdentityReport:
    """diagonal(n) == <n, n>, and <n, n> == 1 + (t-1) <n-1, n-1>."""
    _check_mutation("diag", mutation)
    if mutation == "wrong_power":
        closed = exact_divide(1 - (T - 1) ** (n + 2), 2 - T)
    else:
        closed = diagonal(n)
    lhs = [closed]
    rhs = [genbinom_at(n, n)]
    if n >= 1:
        lhs.append(closed)
        rhs.append(1 + (T - 1) * genbinom_at(n - 1, n - 1))
    return report("diag", {"n": n}, lhs, rhs)


def check_divisibility(n: int, k: int) -> IdentityReport:
    """<n, k> is divisible by (1-t) for k > n; the quotient is the certificate."""
    p = genbinom_at(n, k)
    try:
        q = exact_divide(p, ONE_MINUS_T)
    except InexactDivision:
        return IdentityReport("div", {"n": n, "k": k}, False, p, None,
                              {"reason": "remainder"})
    return report("div", {"n": n, "k": k}, q * ONE_MINUS_T, p, quotient=q)


def check_relation_41(n: int, k: int, mutation: str | None = None) -> IdentityReport:
    """binom(k, n) <n, k> == (1-t) f_{n,k} <-1, k-n-1>."""
    _check_mutation("rel41", mutation)
    lhs, rhs = relation_41_sides(n, k)
    if mutation == "shift_f":
        rhs = ONE_MINUS_T * f_at(n, k + 1) * genbinom_minus_one(k - n - 1)
    return report("rel41", {"n": n, "k": k}, lhs, rhs)


def check_prop_n_nplus1(n: int, mutation: str | None = None) -> IdentityReport:
    """<n, n+1>/(1-t) == sum_{i=0}^{n} i/(i+1) <n, n-i><-1, i-1>."""
    _check_mutation("prop_n_n1", mutation)
    lhs, rhs = prop_n_nplus1_sides(n)
    if mutation == "drop_weight":
        rhs = ZERO_T
        for i in range(1, n + 1):
            rhs = rhs + genbinom_at(n, n - i) * genbinom_minus_one(i - 1)
    return report("prop_n_n1", {"n": n}, lhs, rhs)


# -- binomial expansion ----------------------------------------------------------


def _method1_variant_c0_one(k: int):
    """Method 1 run with the wrong boundary c_0(j) = 1 for all j."""
    rows = {0: [PolyT.const(1)]}
    for j in range(1, k + 1):
        prev1 = rows[j - 1]
        prev2 = rows.get(j - 2, [])

        def c(row, i):
            return row[i] if 0 <= i < len(row) else ZERO_T

        out = [PolyT.const(1)]
        for i in range(1, j + 1):
            alt = ZERO_T
            for m in range(0, j - i):
                term = c(prev2, i + m - 1)
                alt = alt + term if m % 2 == 0 else alt - term
            out.append((T * c(prev1, i - 1) + ONE_MINUS_T * alt) * Fraction(i, j))
        rows[j] = out
    return rows[k]


def check_expansion(k: int, mutation: str | None = None) -> IdentityReport:
    """Method 1 == method 2 == binomial-basis conversion, and round trip."""
    _check_mutation("expansion", mutation)
    direct = expansion_direct(k)
    m1 = list(expansion_method1(k).coeffs)
    if mutation == "method1_c0_one":
        m1 = _method1_variant_c0_one(k)
    m2 = list(expansion_method2(k).coeffs)
    d = list(direct.coeffs)
    back = from_binomial_basis(direct)
    lhs = [m1, m2, back]
    rhs = [d, d, genbinom_symbolic(k)]
    return report("expansion", {"k": k}, lhs, rhs)


def displayed_expansion_rows(k: int) -> dict[int, PolyT]:
    """The five displayed coefficients c_{k-j}(k), j = 1..5, multiplied by t^10
    so that the negative t-powers of the display stay polynomial."""
    s = T - 1

    def tp(e):
        return T ** (e + 10)

    F = Fraction
    return {
        1: -tp(k - 2) * s * F(k - 1, 2),
        2: tp(k - 4) * s * (T**2 + s * F(3 * (k - 3), 8)) * F(k - 2, 3),
        3: -tp(k - 6) * s * (T**4 + T**2 * s * F(4 * k - 13, 6)
                             + s**2 * F(comb(k - 4, 2), 6)) * F(k - 3, 4),
        4: tp(k - 8) * s * (T**6 + T**4 * s * F(65 * k - 229, 72)
                            + T**2 * s**2 * F(5 * (2 * k - 9) * (k - 5), 48)
                            + s**3 * F(5 * comb(k - 5, 3), 64)) * F(k - 4, 5),
        5: -tp(k - 10) * s * (T**8 + T**6 * s * F(66 * k - 251, 60)
                              + T**4 * s**2 * F(85 * k * k - 853 * k + 2148, 240)
                              + T**2 * s**3 * F((4 * k - 23) * comb(k - 6, 2), 48)
                              + s**4 * F(3 * comb(k - 6, 4), 80)) * F(k - 5, 6),
    }


def check_expansion_display(k: int) -> IdentityReport:
    """Regression on the displayed c_{k-1}..c_{k-5}, k >= 6 (empirical display)."""
    if k < 6:
        raise ValueError("the display is stated for k >= 6")
    e = expansion_direct(k)
    rows = displayed_expansion_rows(k)
    lhs = [e.c(k - j) * T**10 for j in rows]
    return report("expansion_display", {"k": k}, lhs, list(rows.values()))


def method2_display(k: int) -> dict[int, PolyT]:
    """Right-hand sides of the four displayed binom(k,i) c_i(k)/(1-t), i = 1..4."""
    m = genbinom_minus_one
    half = T**2 + ONE_MINUS_T * Fraction(k - 1, 2)
    out = {}
    if k >= 2:
        out[1] = m(k - 2)
    if k >= 3:
        out[2] = T * m(k - 3) - m(k - 2) * (k - 1)
    if k >= 4:
        out[3] = half * m(k - 4) - T * m(k - 3) * (k - 2) + m(k - 2) * comb(k - 1, 2)
    if k >= 5:
        out[4] = (T * (T**2 + ONE_MINUS_T * Fraction(5 * k - 8, 6)) * m(k - 5)
                  - half * m(k - 4) * (k - 3)
                  + T * m(k - 3) * comb(k - 2, 2)
                  - m(k - 2) * comb(k - 1, 3))
    return out


def check_method2_display(k: int) -> IdentityReport:
    """The displayed first values of binom(k,i) c_i(k)/(1-t), i <= 4, i <= k-1."""
    e = expansion_direct(k)
    rhs = method2_display(k)
    lhs = [exact_divide(e.c(i) * comb(k, i), ONE_MINUS_T) for i in rhs]
    return report("method2_display", {"k": k}, lhs, list(rhs.values()))


def golden_formulas() -> dict[int, PolyXT]:
    """The four displayed <x, k>, k = 1..4, built from binom(x, i) and t."""
    t = T
    b = binom_x
    return {
        1: b(1) * t,
        2: b(2) * t**2 + b(1) * (ONE_MINUS_T * Fraction(1, 2)),
        3: b(3) * t**3 + b(2) * (t * ONE_MINUS_T) - b(1) * (t * ONE_MINUS_T * Fraction(1, 3)),
        4: (b(4) * t**4 + b(3) * (t**2 * ONE_MINUS_T * Fraction(3, 2))
            - b(2) * (ONE_MINUS_T * (8 * t**2 + 3 * t - 3) * Fraction(1, 12))
            + b(1) * ((1 - t**2) * (2 * t - 1) * Fraction(1, 8))),
    }


def check_golden(k: int) -> IdentityReport:
    gold = golden_formulas()[k]
    return report("golden", {"k": k},
                  to_binomial_basis(genbinom_symbolic(k)).coeffs,
                  to_binomial_basis(gold).coeffs)


# -- hook solutions ----------------------------------------------------------------


def check_psi_golden(r: int) -> IdentityReport:
    """psi_1 = 0, 2 psi_2 = e^u - 1, -6 psi_3 = t(-e^{2u} + 2e^u - 1)."""
    E = hookpsi.ExpPoly
    gold = {
        1: E(),
        2: E({1: 1, 0: -1}) / 2,
        3: E({2: -T, 1: 2 * T, 0: -T}) / -6,
    }
    return report("psi_golden", {"r": r}, hookpsi.psi_r(r).psi, gold[r])


def check_psi_system(s: int, r: int, mutation: str | None = None) -> IdentityReport:
    ident = f"psi_s{s}"
    _check_mutation(ident, mutation)
    if s == 2 and mutation == "interior_minus":
        lhs, rhs = _system_s2_with(hookpsi.psi_r11_minus_variant(r), r)
        return report(ident, {"r": r}, lhs, rhs)
    fn = (hookpsi.verify_system_s0, hookpsi.verify_system_s1, hookpsi.verify_system_s2)[s]
    return fn(r, flip_sign=mutation == "flip_sign")


def _system_s2_with(sol: "hookpsi.HookSolution", r: int):
    a = hookpsi.psi_r1(r + 1).psi
    c = sol.psi
    d = hookpsi.exp_poly_derivative
    lhs = d(a) * r - d(c) * 2
    tail = (hookpsi.psi_r1(r - 1).psi if r >= 2 else hookpsi.ZERO_EXP) + hookpsi.psi_r(r).psi
    rhs = a * (r * r) + c * 4 + hookpsi.psi_r1(r).psi * (T * (r + 1)) - tail * ONE_MINUS_T
    return lhs, rhs


# -- registry and sweep --------------------------------------------------------------

DEFAULTS = {
    "order": 40,
    "max_k": 10,
    "max_n": 20,
    "max_r": 10,
}

RANGES_DOC = {
    "golden": "k = 1..4",
    "thm1": "order",
    "thm1_deriv": "order",
    "cor1": "order",
    "thm1_xy": "t in {0, 1/2, 3, -1, 7/3}, order",
    "rothe": "t in {0, 1/2, 3, -1, 7/3}, n <= 15; classical B = 0 cases",
    "thm2": "n <= 10, order 20",
    "thm2_sym": "k <= 15",
    "cor2": "k <= 30",
    "cor3": "k <= max_k",
    "cor4": "1 <= k <= max_k",
    "cor5": "2 <= n <= max_n",
    "pascal_down": "1 <= m <= max_k",
    "pascal_up": "1 <= m <= max_k",
    "diag": "n <= 30",
    "div": "1 <= n <= 8, n < k <= 16",
    "rel41": "1 <= n <= 8, n < k <= 16",
    "prop_n_n1": "1 <= n <= max_n",
    "expansion": "1 <= k <= 12",
    "expansion_display": "6 <= k <= 12",
    "method2_display": "2 <= k <= 16",
    "psi_golden": "r <= 3",
    "psi_s0": "r <= max_r",
    "psi_s1": "r <= max_r",
    "psi_s2": "r <= 8",
    "psi_init": "s <= 1: r <= max_r; s = 2: r <= 8",
    "psi_t1": "s <= 2, r <= 8",
}

ROTHE_T_VALUES = (Fraction(0), Fraction(1, 2), Fraction(3), Fraction(-1), Fraction(7, 3))
CLASSICAL_ROTHE = ((2, 0, 3, 2), (5, 0, 4, 3), (Fraction(1, 2), 0, Fraction(-3, 4), 4))


def _sweep_fns(order: int, max_k: int, max_n: int, max_r: int) -> dict[str, Callable[[], Iterable[IdentityReport]]]:
    return {
        "golden": lambda: (check_golden(k) for k in range(1, 5)),
        "thm1": lambda: [check_theorem1(order)],
        "thm1_deriv": lambda: [check_G_derivative(order)],
        "cor1": lambda: [check_ode_solution(order)],
        "thm1_xy": lambda: (check_xy_coefficients(t, order) for t in ROTHE_T_VALUES),
        "rothe": lambda: [
            *(check_rothe_parameterized(t, n) for t in ROTHE_T_VALUES for n in range(16)),
            *(check_rothe(*args) for args in CLASSICAL_ROTHE),
        ],
        "thm2": lambda: (check_theorem2(n, 20) for n in range(11)),
        "thm2_sym": lambda: [check_symbolic_power(15)],
        "cor2": lambda: (check_minus_one(k) for k in range(31)),
        "cor3": lambda: (check_chu_vandermonde(k) for k in range(max_k + 1)),
        "cor4": lambda: (check_chu_vandermonde_weighted(k) for k in range(1, max_k + 1)),
        "cor5": lambda: (check_corollary5(n) for n in range(2, max_n + 1)),
        "pascal_down": lambda: (check_pascal_down(m) for m in range(1, max_k + 1)),
        "pascal_up": lambda: (check_pascal_up(m) for m in range(1, max_k + 1)),
        "diag": lambda: (check_diagonal(n) for n in range(31)),
        "div": lambda: (check_divisibility(n, k) for n in range(1, 9) for k in range(n + 1, 17)),
        "rel41": lambda: (check_relation_41(n, k) for n in range(1, 9) for k in range(n + 1, 17)),
        "prop_n_n1": lambda: (check_prop_n_nplus1(n) for n in range(1, max_n + 1)),
        "expansion": lambda: (check_expansion(k) for k in range(1, 13)),
        "expansion_display": lambda: (check_expansion_display(k) for k in range(6, 13)),
        "method2_display": lambda: (check_method2_display(k) for k in range(2, 17)),
        "psi_golden": lambda: (check_psi_golden(r) for r in range(1, 4)),
        "psi_s0": lambda: (check_psi_system(0, r) for r in range(1, max_r + 1)),
        "psi_s1": lambda: (check_psi_system(1, r) for r in range(1, max_r + 1)),
        "psi_s2": lambda: (check_psi_system(2, r) for r in range(1, 9)),
        "psi_init": lambda: [
            *(hookpsi.verify_initial_condition(r, s) for s in (0, 1) for r in range(1, max_r + 1)),
            *(hookpsi.verify_initial_condition(r, 2) for r in range(1, 9)),
        ],
        "psi_t1": lambda: (hookpsi.verify_t1(r, s) for s in (0, 1, 2) for r in range(1, 9)),
    }


IDENTITY_IDS = tuple(RANGES_DOC)


def run_sweep(identity: str = "all", order: int | None = None, max_k: int | None = None,
              max_n: int | None = None, max_r: int | None = None) -> list[IdentityReport]:
    """Run one identity family or all of them; reports in a fixed order."""
    order = DEFAULTS["order"] if order is None else order
    max_k = DEFAULTS["max_k"] if max_k is None else max_k
    max_n = DEFAULTS["max_n"] if max_n is None else max_n
    max_r = DEFAULTS["max_r"] if max_r is None else max_r
    fns = _sweep_fns(order, max_k, max_n, max_r)
    if identity == "all":
        ids = list(fns)
    elif identity in fns:
        ids = [identity]
    else:
        raise UnknownIdentity(identity)
    out: list[IdentityReport] = []
    for ident in ids:
        out.extend(fns[ident]())
    return out


def negative_controls() -> list[IdentityReport]:
    """One mutated instance per identity family; every report must be false."""
    return [
        check_theorem1(10, mutation="flip_h3"),
        check_rothe(*rothe_parameters(Fraction(1, 2), 4), 4, mutation="drop_prefactor"),
        check_theorem2(3, 6, mutation="perturb_g2"),
        check_chu_vandermonde(2, mutation="drop_i0"),
        check_chu_vandermonde_weighted(3, mutation="drop_weight"),
        check_corollary5(2, mutation="shift_index"),
        check_pascal_down(4, mutation="drop_last"),
        check_pascal_up(3, mutation="drop_last"),
        check_diagonal(3, mutation="wrong_power"),
        check_relation_41(3, 6, mutation="shift_f"),
        check_prop_n_nplus1(3, mutation="drop_weight"),
        check_expansion(4, mutation="method1_c0_one"),
        check_psi_system(0, 4, mutation="flip_sign"),
        check_psi_system(1, 4, mutation="flip_sign"),
        check_psi_system(2, 3, mutation="interior_minus"),
    ]
