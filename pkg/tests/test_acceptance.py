"""Acceptance criteria 1-11, exact equality throughout.

Each test prints one line, ``ACCEPTANCE <n> <name>: PASS|FAIL``, with the
failing parameter sets when there are any.
"""

import time
from fractions import Fraction

import pytest

from tbinom import hookpsi, identities as ids
from tbinom.report import IdentityReport


@pytest.fixture
def record(capsys):
    def _record(number, name, reports, started):
        failed = [(r.identity_id, r.parameters) for r in reports if not r.holds]
        verdict = "PASS" if not failed else "FAIL"
        secs = time.perf_counter() - started
        line = f"ACCEPTANCE {number:>2} {name}: {verdict} ({len(reports)} checks, {secs:.2f}s)"
        if failed:
            line += f" failing={failed}"
        with capsys.disabled():
            print("\n" + line)
        return failed

    return _record


def test_criterion_01_golden_formulas(record):
    t0 = time.perf_counter()
    reports = [ids.check_golden(k) for k in range(1, 5)]
    assert record(1, "golden first values k=1..4", reports, t0) == []


def test_criterion_02_series_inverse(record):
    t0 = time.perf_counter()
    reports = [
        ids.check_theorem1(40),
        ids.check_G_derivative(40),
        ids.check_ode_solution(40),
    ]
    assert reports[1].parameters == {"order": 39}
    assert record(2, "G*H = 1, G' = t + (1-t)uH, ODE uniqueness (order 40)", reports, t0) == []


def test_criterion_03_generating_function(record):
    t0 = time.perf_counter()
    reports = [ids.check_symbolic_power(15)]
    reports += [ids.check_theorem2(n, 20) for n in range(11)]
    assert record(3, "G^x coefficients k<=15; G^n, n<=10, k<=20", reports, t0) == []


def test_criterion_04_minus_one(record):
    t0 = time.perf_counter()
    reports = [ids.check_minus_one(k) for k in range(31)]
    assert record(4, "<-1,k> closed form, k<=30", reports, t0) == []


def test_criterion_05_convolutions(record):
    t0 = time.perf_counter()
    reports = [ids.check_chu_vandermonde(k) for k in range(11)]
    reports += [ids.check_chu_vandermonde_weighted(k) for k in range(1, 11)]
    reports += [ids.check_corollary5(n) for n in range(2, 21)]
    for r in reports[:21]:
        assert r.details["bounds_dominate"]
    assert record(5, "Chu-Vandermonde, weighted variant (k<=10), zero sum (n<=20)", reports, t0) == []


def test_criterion_06_pascal(record):
    t0 = time.perf_counter()
    reports = [ids.check_pascal_down(m) for m in range(1, 11)]
    reports += [ids.check_pascal_up(m) for m in range(1, 11)]
    assert record(6, "Pascal-type recurrences, m<=10", reports, t0) == []


def test_criterion_07_integer_arguments(record):
    t0 = time.perf_counter()
    reports = [ids.check_diagonal(n) for n in range(31)]
    pairs = [(n, k) for n in range(1, 9) for k in range(n + 1, 17)]
    reports += [ids.check_divisibility(n, k) for n, k in pairs]
    reports += [ids.check_relation_41(n, k) for n, k in pairs]
    reports += [ids.check_prop_n_nplus1(n) for n in range(1, 21)]
    assert record(7, "diagonal n<=30, (1-t) divisibility, f-relation, <n,n+1>", reports, t0) == []


def test_criterion_08_binomial_expansion(record):
    t0 = time.perf_counter()
    reports = [ids.check_expansion(k) for k in range(1, 13)]
    reports += [ids.check_expansion_display(k) for k in range(6, 13)]
    reports += [ids.check_method2_display(k) for k in range(2, 17)]
    assert record(8, "method 1 = method 2 = basis change k<=12, displays", reports, t0) == []


def test_criterion_09_hook_solutions(record):
    t0 = time.perf_counter()
    reports = [ids.check_psi_golden(r) for r in range(1, 4)]
    reports += [hookpsi.verify_system_s0(r) for r in range(1, 11)]
    reports += [hookpsi.verify_system_s1(r) for r in range(1, 11)]
    reports += [hookpsi.verify_system_s2(r) for r in range(1, 9)]
    reports += [hookpsi.verify_initial_condition(r, s) for s in (0, 1) for r in range(1, 11)]
    reports += [hookpsi.verify_initial_condition(r, 2) for r in range(1, 9)]
    reports += [hookpsi.verify_t1(r, s) for s in (0, 1, 2) for r in range(1, 9)]
    assert record(9, "psi golden, residuals, initial values, t=1 forms", reports, t0) == []


def test_criterion_10_rothe(record):
    t0 = time.perf_counter()
    reports = [ids.check_rothe_parameterized(t, n) for t in ids.ROTHE_T_VALUES for n in range(16)]
    reports += [ids.check_rothe(*args) for args in ids.CLASSICAL_ROTHE]
    reports += [ids.check_xy_coefficients(t, 40) for t in ids.ROTHE_T_VALUES]
    assert {r.parameters["t"] for r in reports[:80]} == {
        Fraction(0), Fraction(1, 2), Fraction(3), Fraction(-1), Fraction(7, 3)}
    assert record(10, "Rothe at t in {0,1/2,3,-1,7/3}, n<=15; B=0 cases", reports, t0) == []


def test_criterion_11_negative_controls(record):
    t0 = time.perf_counter()
    mutated = ids.negative_controls()
    families = {r.identity_id for r in mutated}
    assert families == set(ids.MUTATIONS)
    # a control passes when its mutated identity is detected as false
    detected = [
        IdentityReport(r.identity_id, {"mutation": ids.MUTATIONS[r.identity_id]}, not r.holds)
        for r in mutated
    ]
    assert record(11, "every mutated family detected as false", detected, t0) == []
