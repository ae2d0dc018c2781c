import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tbinom.polyalg import (
    T,
    X,
    BinomialExpansion,
    InexactDivision,
    PolyT,
    PolyXT,
    exact_divide,
    from_binomial_basis,
    grid_counterexample,
    poly_divmod,
    poly_equal_on_grid,
    to_binomial_basis,
)

from conftest import polys, polys_xt, rationals


def test_canonical_zero():
    assert PolyT([0, 0, 0]) == PolyT()
    assert PolyT().is_zero()
    assert PolyXT([PolyT(), PolyT()]).is_zero()
    assert not PolyT()


def test_degree_of_zero_is_negative_infinity():
    assert PolyT().degree < 0
    assert PolyT([3]).degree == 0


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == PolyT()


@given(polys, polys, rationals)
def test_evaluation_is_a_homomorphism(a, b, v):
    assert (a * b)(v) == a(v) * b(v)
    assert (a + b)(v) == a(v) + b(v)


@given(polys_xt, polys_xt, rationals)
def test_shift_is_a_ring_homomorphism(p, q, c):
    assert (p * q).shift_x(c) == p.shift_x(c) * q.shift_x(c)
    assert (p + q).shift_x(c) == p.shift_x(c) + q.shift_x(c)


@given(polys_xt, rationals, rationals)
def test_shift_matches_evaluation(p, c, v):
    assert p.shift_x(c).eval_x(v) == p.eval_x(v + c)


@given(polys_xt, polys_xt, rationals, rationals)
def test_bivariate_product_evaluates_pointwise(p, q, xv, tv):
    assert (p * q)(xv, tv) == p(xv, tv) * q(xv, tv)


def test_mixed_variables_rejected():
    with pytest.raises(ValueError):
        PolyT.gen("t") + PolyT.gen("k")


@given(polys, polys)
def test_divmod(p, d):
    if d.is_zero():
        return
    q, r = poly_divmod(p, d)
    assert q * d + r == p
    assert r.degree < d.degree


@given(polys, polys)
def test_exact_divide_certificate(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        exact_divide(T + 1, T)
    with pytest.raises(InexactDivision):
        exact_divide(X * X + 1, X)


def test_exact_division_in_x():
    d = X - PolyXT.from_t(T)
    q = X * X + PolyXT.from_t(1 - T) * X + 3
    assert exact_divide(q * d, d) == q


@given(polys_xt)
def test_binomial_basis_round_trip(p):
    e = to_binomial_basis(p)
    assert from_binomial_basis(e) == p


def test_binomial_basis_of_x_squared():
    # x^2 = 2 binom(x,2) + binom(x,1)
    e = to_binomial_basis(X * X)
    assert e.c(2) == 2 and e.c(1) == 1 and e.c(0) == 0


@given(polys)
def test_polyt_json_round_trip(p):
    text = json.dumps(p.to_json())
    back = PolyT.from_json(json.loads(text))
    assert back == p
    assert json.dumps(back.to_json()) == text


@given(polys_xt)
def test_polyxt_json_round_trip(p):
    text = json.dumps(p.to_json())
    assert PolyXT.from_json(json.loads(text)) == p
    assert json.dumps(PolyXT.from_json(json.loads(text)).to_json()) == text


@given(polys_xt)
def test_expansion_json_round_trip(p):
    e = to_binomial_basis(p)
    text = json.dumps(e.to_json())
    assert BinomialExpansion.from_json(json.loads(text)) == e


def test_noncanonical_json_rejected():
    with pytest.raises(ValueError):
        PolyT.from_json({"var": "t", "coeffs": [["1", "1"], ["0", "1"]]})


def test_latex_descending():
    assert (T * T - T * 3 + Fraction(1, 2)).latex() == "t^{2} - 3 t + \\frac{1}{2}"


@given(polys_xt, st.integers(0, 3))
def test_grid_soundness(p, bump):
    # a perturbation of degree within the bounds is always found on the grid
    q = p + X ** bump * PolyXT.from_t(T)
    dx = max(p.deg_x if not p.is_zero() else 0, bump)
    dt = max(p.deg_t if not p.is_zero() else 0, 1)
    assert poly_equal_on_grid(p, p, (dx, dt))
    assert grid_counterexample(p, q, (dx, dt)) is not None
