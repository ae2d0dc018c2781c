import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tbinom.hookpsi import (
    ExpPoly,
    HookSolution,
    a_recurrence_sides,
    b_recurrence_sides,
    c_recurrence_sides,
    exp_poly_derivative,
    hook_solution,
    psi_r,
    psi_r1,
    psi_r11,
    psi_r11_minus_variant,
    system_s2_sides,
    t1_binomial_form,
    t1_closed_form,
    verify_initial_condition,
    verify_system_s0,
    verify_system_s1,
    verify_system_s2,
    verify_t1,
)
from tbinom.polyalg import T, PolyT

from conftest import polys

exp_polys = st.dictionaries(st.integers(-3, 3), polys, max_size=4).map(ExpPoly)


def E(**kw):
    return ExpPoly(kw)


def test_golden_first_values():
    assert psi_r(1).psi == ExpPoly()
    two = psi_r(2)
    assert two.scale == 2
    assert two.body == ExpPoly({1: PolyT.const(1), 0: PolyT.const(-1)})
    three = psi_r(3)
    assert three.scale == -6
    assert three.body == ExpPoly({2: -T, 1: 2 * T, 0: -T})


def test_latex_display():
    assert psi_r(2).latex() == "2\\psi_2 = e^{u} - 1"
    assert psi_r(3).latex() == "-6\\psi_3 = -t e^{2u} + 2 t e^{u} - t"


@given(exp_polys, exp_polys)
def test_derivative_product_rule(a, b):
    d = exp_poly_derivative
    assert d(a * b) == d(a) * b + a * d(b)


@given(exp_polys)
def test_exp_poly_json_round_trip(p):
    assert ExpPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


@pytest.mark.parametrize("s", [0, 1, 2])
def test_hook_solution_json_round_trip(s):
    sol = hook_solution(4, s)
    text = json.dumps(sol.to_json(), sort_keys=True)
    back = HookSolution.from_json(json.loads(text))
    assert back == sol
    assert json.dumps(back.to_json(), sort_keys=True) == text


@pytest.mark.parametrize("r", range(1, 8))
def test_first_two_equations(r):
    assert verify_system_s0(r).holds
    assert verify_system_s1(r).holds


@pytest.mark.parametrize("r", range(1, 7))
def test_third_equation(r):
    assert verify_system_s2(r).holds


@pytest.mark.parametrize("r", range(2, 7))
def test_interior_minus_sign_fails(r):
    sol = psi_r11_minus_variant(r)
    assert sol != psi_r11(r)


@pytest.mark.parametrize("r", range(1, 7))
@pytest.mark.parametrize("s", [0, 1, 2])
def test_initial_condition(r, s):
    assert verify_initial_condition(r, s).holds


@pytest.mark.parametrize("r", range(2, 7))
@pytest.mark.parametrize("s", [0, 1, 2])
def test_t_equal_one(r, s):
    assert verify_t1(r, s).holds


def test_t_equal_one_with_r_one():
    # the closed form gives 1 at (r, s) = (1, 0) while psi_1 = 0
    assert t1_closed_form(1, 0) == ExpPoly({0: PolyT.const(1)})
    assert not verify_t1(1, 0).holds
    assert verify_t1(1, 1).holds and verify_t1(1, 2).holds


@pytest.mark.parametrize("r,s", [(1, 1), (3, 0), (4, 2), (6, 1)])
def test_two_t1_forms_agree(r, s):
    assert t1_closed_form(r, s) == t1_binomial_form(r, s)


@pytest.mark.parametrize("r", range(3, 8))
def test_a_recurrence(r):
    for i in range(0, r - 1):
        lhs, rhs = a_recurrence_sides(r, i)
        assert lhs == rhs


@pytest.mark.parametrize("r", range(2, 7))
def test_b_recurrence(r):
    for i in range(1, r):
        lhs, rhs = b_recurrence_sides(r, i)
        assert lhs == rhs


@pytest.mark.parametrize("r", range(1, 7))
def test_c_recurrence(r):
    for i in range(1, r):
        lhs, rhs = c_recurrence_sides(r, i)
        assert lhs == rhs


def test_scale_of_psi_1_1():
    assert psi_r1(1).scale == 2


def test_s_out_of_range():
    with pytest.raises(ValueError):
        hook_solution(2, 3)


@pytest.mark.parametrize("r", range(1, 8))
def test_c0_cross_check(r):
    from tbinom.genbinom import diagonal
    from tbinom.hookpsi import c_coeff

    assert c_coeff(r, 0) * -4 == diagonal(r) * (2 * r * (r + 1))
