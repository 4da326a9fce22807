from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from umbral import oracles, umbra as U
from umbral.bellpoly import partition_poly
from umbral.errors import NonInvertible, OrderExceeded, UnknownName
from umbral.series import X, Poly, Series

N = 10
t = Series.t(N)


def sp(name):
    return U.special(name, N)


def falling(n):
    p = Poly((1,))
    for k in range(n):
        p = p * (X - k)
    return p


def rising(n):
    p = Poly((1,))
    for k in range(n):
        p = p * (X + k)
    return p


def test_special_moments():
    assert sp("iota").moments()[:5] == oracles.bernoulli_numbers(4)
    assert sp("iota").moments()[:5] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
    assert sp("epsilon").moments() == [1] + [0] * N
    assert sp("delta").moments() == [factorial(n) * oracles.fibonacci(n) for n in range(N + 1)]
    assert sp("u").moments() == [1] * (N + 1)
    assert sp("bell").moments() == oracles.bell_numbers(N)
    assert U.moment(sp("ubar"), 4) == 24
    assert U.moment(sp("chi"), 2) == 0


def test_aliases_and_unknown():
    assert U.similar(U.special("eps", N), sp("epsilon"))
    assert U.similar(U.special("beta", N), sp("bell"))
    with pytest.raises(UnknownName):
        U.special("gamma", N)


def test_moment_beyond_order():
    with pytest.raises(OrderExceeded):
        sp("u").moment(N + 1)


def test_scale_and_add():
    assert U.scale(-1, sp("chi")).gf == 1 - t
    a = U.from_moments([1, F(2), F(3), F(-1)])
    g = U.from_moments([1, F(1, 2), F(5), F(7)])
    assert U.add(a, g).moment(2) == a.moment(2) + 2 * a.moment(1) * g.moment(1) + g.moment(2)


def test_dot_int_and_dot_x():
    assert U.dot_int(2, sp("chi")).moments()[:5] == [1, 2, 2, 0, 0]
    for n in range(7):
        assert U.dot_x(sp("chi")).moment(n) == falling(n)
        assert U.dot_x(sp("ubar")).moment(n) == rising(n)
        assert U.dot_x(sp("u")).moment(n) == X ** n


def test_dot_minus_one_minus_chi_is_ubar():
    assert U.similar(U.dot_int(-1, U.scale(-1, sp("chi"))), sp("ubar"))


def test_partition_and_composition():
    assert U.similar(U.partition(sp("u")), sp("bell"))
    g = U.from_moments([1, F(3), F(-2), F(1, 2), F(4)])
    g4 = U.from_gf(g.gf.truncate(4))
    chi4 = U.special("chi", 4)
    assert U.compose_umbra(g4, chi4).gf == g4.gf
    delta = sp("delta")
    alpha = U.compose_umbra(sp("ubar"), U.derivative(delta))
    assert alpha.gf == (1 - t * delta.gf).recip()


def test_composition_via_bell_polynomials():
    """E[(g.bell.a)^n] = sum_k g_k B_{n,k}(a_1, a_2, ...)."""
    g = U.from_moments([1, F(2), F(-1), F(3), F(1, 2), F(5), F(-2)])
    a = U.from_moments([1, F(1, 3), F(4), F(-2), F(1), F(0), F(6)])
    comp = U.compose_umbra(g, a)
    for n in range(7):
        p = partition_poly(n, a.moments())
        want = sum((c * g.moment(k) for k, c in enumerate(p.coeffs)), F(0))
        assert comp.moment(n) == want


def test_inverse_and_adjoint():
    assert U.comp_inverse_umbra(sp("u")).gf == 1 + (1 + t).log()
    with pytest.raises(NonInvertible):
        U.comp_inverse_umbra(sp("epsilon"))
    assert U.similar(U.adjoint(sp("u")), sp("chi"))
    assert U.similar(U.adjoint(sp("chi")), sp("u"))


def test_derivative():
    assert U.derivative(sp("chi")).gf == 1 + t + t * t
    d = U.derivative(sp("delta"))
    for n in range(1, N + 1):
        assert d.moment(n) == n * factorial(n - 1) * oracles.fibonacci(n - 1)


def test_fibonacci_umbra_chain():
    chain = U.dot_umbra(U.dot_umbra(sp("ubar"), sp("bell")), U.derivative(sp("chi")))
    assert chain.gf == (1 - t - t * t).recip()


def test_evaluate_uncorrelated_sum():
    a = U.from_moments([1, F(2), F(3)])
    g = U.from_moments([1, F(1, 2), F(5)])
    e = U.Leaf(a) + U.Leaf(g)
    assert U.evaluate(e, 2) == 3 + 2 * 2 * F(1, 2) + 5


def test_evaluate_correlated_repeat():
    a = U.from_moments([1, F(2), F(3)])
    e = U.Leaf(a) + U.Leaf(a)
    assert U.evaluate(e, 2) == 4 * 3
    assert U.evaluate(U.Leaf(a) + U.Leaf(a.fresh()), 2) == 3 + 8 + 3


def test_evaluate_singleton_and_order():
    for n in range(2, N + 1):
        assert U.evaluate(sp("chi"), n) == 0
    with pytest.raises(OrderExceeded):
        U.evaluate(sp("chi"), N + 1)


def test_ballot_first_moment():
    from umbral import recurrences as R

    for m in range(7):
        e = U.Sum((
            U.Leaf(sp("ubar")),
            U.Leaf(R._dyck_zeta_umbra(N)),
            U.Leaf(U.dot_int(m, R.dyck_gamma_star(N))),
        ))
        assert U.evaluate(e, 1) == m


moments = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=4), min_size=6, max_size=6)


@settings(max_examples=30, deadline=None)
@given(moments, moments, moments)
def test_dot_associative_and_distributive(ma, mb, mc):
    a, b, c = (U.from_moments([1] + m) for m in (ma, mb, mc))
    assert U.similar(U.dot_umbra(U.dot_umbra(a, b), c), U.dot_umbra(a, U.dot_umbra(b, c)))
    assert U.similar(U.dot_umbra(U.add(a, b), c), U.add(U.dot_umbra(a, c), U.dot_umbra(b, c)))


@settings(max_examples=30, deadline=None)
@given(moments, st.integers(-3, 4))
def test_dot_int_matches_dot_x_specialized(ma, k):
    a = U.from_moments([1] + ma)
    assert U.dot_int(k, a).gf == U.dot_x(a).gf.at_x(k)


@settings(max_examples=30, deadline=None)
@given(moments)
def test_inverse_is_involution(ma):
    if ma[0] == 0:
        ma[0] = F(1)
    a = U.from_moments([1] + ma)
    inv = U.comp_inverse_umbra(a)
    assert U.similar(U.comp_inverse_umbra(inv), a)
    # gamma.bell.gamma^<-1> is the singleton umbra
    assert U.compose_umbra(a, inv).gf == 1 + Series.t(a.order)
