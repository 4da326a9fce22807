from fractions import Fraction as F
from math import factorial

import pytest

from umbral import oracles, recurrences as R, umbra as U
from umbral.errors import OrderExceeded, PreconditionFailed
from umbral.series import X, Poly, Series


def test_integral_case_small():
    assert R.solve_integral_case(0) == 1
    assert R.solve_integral_case(1) == X + F(1, 2)
    for n in range(6):
        c = R.integral_case_checks(n)
        assert c["recurrence"]
        assert c["integral_coefficientwise"] == 1
        assert c["integral_umbral"] == 1


def test_umbral_integral_matches_direct():
    for p in (Poly((1,)), X, X ** 2 - X, X ** 5 - 3 * X + F(1, 7)):
        assert R.integral_by_bernoulli(p) == oracles.integrate01(p)


def test_pascal_case_small():
    assert R.solve_pascal_case(0) == 1
    assert R.solve_pascal_case(1) == X + 1
    assert R.solve_pascal_case(2)(-1) == 2
    assert R.pascal_alpha_moments(5)[:5] == [1, 1, 4, 30, 288]
    for n in range(6):
        assert all(R.pascal_case_checks(n).values())


def test_pascal_alpha_gf():
    t = Series.t(10)
    delta = U.special("delta", 10)
    assert R.pascal_alpha_moments(10) == U.from_gf((1 - t * delta.gf).recip()).moments()
    # (1 - t - t^2) / (1 - 2t - t^2)
    assert R._pascal_alpha(10).gf == (1 - t - t * t) / (1 - 2 * t - t * t)


def test_fibonacci_remark():
    assert R.fibonacci_delta_consistency(12)
    total = sum((U.moment(U.dot_int(3 - i, U.special("chi")), i) / factorial(i) for i in range(4)), F(0))
    assert total == 3 == oracles.fibonacci(3)


def test_fibonacci_case():
    assert R.solve_fibonacci_case(2) == (X ** 2 + X + 4) / 2
    assert R.solve_fibonacci_case(3)(0) == 3
    for n in range(10):
        assert R.fibonacci_case_residual(n) == 0


def test_fibonacci_initial_values_are_not_all_one():
    assert R.fibonacci_initial_values(5) == [1, 0, 3, -7, 28, -98]


def test_order_guard():
    with pytest.raises(OrderExceeded):
        R.solve_pascal_case(9, order=8)
    with pytest.raises(OrderExceeded):
        R.dyck_count(9, 10, order=8)


def test_ballot_counts():
    assert [R.dyck_count(1, m) for m in range(1, 7)] == list(range(1, 7))
    assert R.dyck_count(2, 5) == 11
    assert R.dyck_count(3, 5) == 17
    assert R.dyck_count(4, 6) == 46
    assert [R.dyck_count(n, n) for n in range(6)] == [1, 1, 2, 4, 9, 23]
    with pytest.raises(PreconditionFailed):
        R.dyck_count(3, 2)


def test_ballot_recurrences():
    assert R.dyck_recurrence_holds(7)
    for n in range(8):
        assert R.dyck_polynomial_recurrence(n) == 0


def test_ballot_gamma():
    g = R.dyck_gamma(10)
    assert g.moment(1) == 1
    assert U.similar(U.adjoint(g), R.dyck_gamma_star(10))
    assert R.dyck_zeta(4)[:2] == [1, R.dyck_zeta(4)[1]]


def test_ballot_alternative_form_agrees():
    gstar = R.dyck_gamma_star(10)
    for m in range(1, 7):
        for n in range(m + 1):
            assert R.dyck_s_poly(n)(m) == factorial(n) * R.dyck_count(n, m)
            assert factorial(n) * oracles.count_ballot_paths(n, m) == R.dyck_s_poly(n)(m)
    assert gstar.moment(1) == 1


@pytest.mark.parametrize("name", ["chi", "u"])
def test_closing_results_special(name):
    g = U.special(name, 8)
    for n in range(1, 7):
        assert R.check_prop_reci(g, n)
    for c in (0, 1, 2):
        for n in range(7):
            assert R.check_final_theorem(g, c, n)


def test_closing_preconditions():
    with pytest.raises(PreconditionFailed):
        R.check_prop_reci(U.dot_int(2, U.special("chi")), 2)
    with pytest.raises(PreconditionFailed):
        R.check_final_theorem(U.dot_int(2, U.special("chi")), 1, 2)
    with pytest.raises(PreconditionFailed):
        R.check_prop_reci(U.special("chi"), 0)


def test_final_theorem_sequence_vanishes_at_minus_cn():
    """E[(chi.c.bell.D(eta) + x.g*)^n] = (x + cn) p_n(x) / x vanishes at x = -cn for n >= 1."""
    g = R.dyck_gamma(8)
    assoc = U.dot_x(U.adjoint(g))
    for c in (1, 2):
        lead = R.final_theorem_umbra(g, c)
        for n in range(6):
            s = U.evaluate(U.Leaf(lead) + U.Leaf(assoc), n)
            s = s if isinstance(s, Poly) else Poly((s,))
            if n:
                assert s == (X + c * n) * (assoc.moment(n) / X)
            assert s(-c * n) == (1 if n == 0 else 0)
