"""Solvers for four linear recurrences, each computed along two routes.

* integral case: ``q_n(x+1) = q_n(x) + q_{n-1}(x)`` with ``int_0^1 q_n = 1``;
  ``q_n(x) = E[(ubar + (iota + x.u).chi)^n] / n!``.
* Pascal case: ``q_n(x) = q_n(x-1) + q_{n-1}(x)`` with
  ``q_n(1-n) = sum_{i<n} q_i(n-2i)``;
  ``q_n(x) = E[(ubar.bell.D(delta) + (x+n-1).chi)^n] / n!``.
* Fibonacci case: ``F_n(x+n+1) = F_n(x+n) + F_{n-1}(x+n-1)``;
  ``F_n(x+n) = E[(delta + x.chi)^n] / n! = sum_k binom(x+k, n-k)``.
* ballot paths avoiding ``urru``: ``D(n, m) = E[(ubar + zeta + m.gamma*)^n] / n!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from . import umbra as U
from .bellpoly import MomentSeq
from .dsl import parse
from .errors import NonIntegerCount, OrderExceeded, PreconditionFailed, RouteMismatch
from .oracles import integrate01
from .series import DEFAULT_ORDER, ZERO, Poly, Series, X, binomial_poly
from .sheffer import CheckResult


@dataclass(frozen=True)
class RecurrenceSolution:
    name: str
    q: Callable[[int], Poly]
    provenance: str


def _as_poly(v):
    return v if isinstance(v, Poly) else Poly((v,))


def _need(n, order):
    if n > order:
        raise OrderExceeded(f"n={n} exceeds truncation order {order}")


def _agree(label, a, b):
    if a != b:
        raise RouteMismatch(f"{label}: {a} != {b}")
    return a


# integral initial condition


@lru_cache(maxsize=None)
def _integral_gf(order):
    t = Series.t(order)
    one_plus_t = 1 + t
    iota = U.special("iota", order)
    return one_plus_t.pow_x() * iota.gf.compose(one_plus_t.log()) / (1 - t)


def solve_integral_case(n, order=DEFAULT_ORDER):
    _need(n, order)
    expr = parse("ubar + (iota + x.u).chi", order)
    umbral = _as_poly(U.evaluate(expr, n)) / factorial(n)
    direct = _as_poly(_integral_gf(order).coeff(n))
    return _agree(f"integral case q_{n}", umbral, direct)


def integral_by_bernoulli(p, order=DEFAULT_ORDER):
    """``E[p(-1.iota)]``: integrate a polynomial over ``[0, 1]`` umbrally."""
    p = _as_poly(p)
    inv_iota = U.dot_int(-1, U.special("iota", max(order, p.degree)))
    return sum((c * inv_iota.moment(k) for k, c in enumerate(p.coeffs)), ZERO)


def integral_case_checks(n, order=DEFAULT_ORDER):
    """Recurrence residual and both integrals of ``q_n``."""
    q = solve_integral_case(n, order)
    prev = solve_integral_case(n - 1, order) if n else Poly()
    residual = q.shift(1) - q - prev
    return {
        "recurrence": residual == 0,
        "integral_coefficientwise": integrate01(q),
        "integral_umbral": integral_by_bernoulli(q, order),
    }


# Pascal's recursion


@lru_cache(maxsize=None)
def _pascal_alpha(order):
    delta = U.special("delta", order)
    t = Series.t(order)
    return U.from_gf((1 - t * delta.gf).recip(), "ubar.bell.D(delta)")


def pascal_alpha_moments(N=DEFAULT_ORDER):
    return _pascal_alpha(N).moments()


def solve_pascal_case(n, order=DEFAULT_ORDER):
    _need(n, order)
    a = _pascal_alpha(order)
    closed = Poly()
    for k in range(n + 1):
        closed = closed + a.moment(k) / factorial(k) * binomial_poly(X + (n - 1), n - k)
    expr = parse(f"ubar.bell.D(delta) + (x + {n - 1}).chi", order)
    umbral = _as_poly(U.evaluate(expr, n)) / factorial(n)
    return _agree(f"Pascal case q_{n}", closed, umbral)


def pascal_case_checks(n, order=DEFAULT_ORDER):
    q = [solve_pascal_case(k, order) for k in range(n + 1)]
    residual = q[n] - q[n].shift(-1) - (q[n - 1] if n else Poly())
    if n == 0:
        initial = q[0](-1) == 1
    else:
        initial = q[n](1 - n) == sum((q[i](n - 2 * i) for i in range(n)), ZERO)
    alpha_moment = _pascal_alpha(order).moment(n)
    return {
        "recurrence": residual == 0,
        "initial_condition": initial,
        "alpha_moment": factorial(n) * q[n](1 - n) == alpha_moment,
    }


def fibonacci_delta_consistency(order=DEFAULT_ORDER):
    """True when the three descriptions of the Fibonacci umbra agree.

    (i) ``ubar.bell.D(chi)`` has gf ``1/(1-t-t^2)``; (ii) the moments of
    ``alpha = ubar.bell.D(delta)`` satisfy ``a_n = n E[(alpha+delta)^(n-1)]``;
    (iii) ``delta^n / n! = sum_i [(n-i).chi]^i / i!``.
    """
    delta = U.special("delta", order)
    ubar, bell, chi = (U.special(k, order) for k in ("ubar", "bell", "chi"))
    via_dots = U.dot_umbra(U.dot_umbra(ubar, bell), U.derivative(chi))
    via_compose = U.compose_umbra(ubar, U.derivative(chi))
    if not (U.similar(via_dots, delta) and U.similar(via_compose, delta)):
        return False
    alpha = _pascal_alpha(order)
    for n in range(1, order + 1):
        if alpha.moment(n) != n * U.evaluate(U.Leaf(alpha) + U.Leaf(delta), n - 1):
            return False
    for n in range(order + 1):
        total = sum(
            (U.moment(U.dot_int(n - i, chi), i) / factorial(i) for i in range(n + 1)),
            ZERO,
        )
        if delta.moment(n) / factorial(n) != total:
            return False
    return True


# Fibonacci numbers


def solve_fibonacci_case(n, order=DEFAULT_ORDER):
    """``F_n(x + n)`` as a polynomial in ``x``."""
    _need(n, order)
    closed = Poly()
    for k in range(n + 1):
        closed = closed + binomial_poly(X + k, n - k)
    umbral = _as_poly(U.evaluate(parse("delta + x.chi", order), n)) / factorial(n)
    return _agree(f"Fibonacci case F_{n}", closed, umbral)


def fibonacci_case_residual(n, order=DEFAULT_ORDER):
    """``F_n(x+n+1) - F_n(x+n) - F_{n-1}(x+n-1)`` in terms of ``G_n(x) = F_n(x+n)``."""
    g = solve_fibonacci_case(n, order)
    prev = solve_fibonacci_case(n - 1, order) if n else Poly()
    return g.shift(1) - g - prev


def fibonacci_initial_values(nmax, order=DEFAULT_ORDER):
    """``F_n(0)``, i.e. the closed form at ``x = -n``, for ``n <= nmax``.

    These are reported rather than asserted: they do not all equal 1.
    """
    return [solve_fibonacci_case(n, order)(-n) for n in range(nmax + 1)]


# ballot paths avoiding urru


@lru_cache(maxsize=None)
def dyck_gamma_star(order=DEFAULT_ORDER):
    t = Series.t(order)
    f = (1 - t * t + t * t * t) / (1 - t)
    return U.from_gf(f, "gstar")


@lru_cache(maxsize=None)
def dyck_gamma_inverse(order=DEFAULT_ORDER):
    return U.from_gf(1 + dyck_gamma_star(order).gf.log(), "inv(gamma)")


@lru_cache(maxsize=None)
def dyck_gamma(order=DEFAULT_ORDER):
    return U.comp_inverse_umbra(dyck_gamma_inverse(order))


def dyck_zeta(N=DEFAULT_ORDER):
    inv = dyck_gamma_inverse(N)
    return MomentSeq([1] + [-k * inv.moment(k) for k in range(1, N + 1)])


@lru_cache(maxsize=None)
def _dyck_zeta_umbra(order):
    return U.from_moments(dyck_zeta(order), "zeta")


@lru_cache(maxsize=None)
def _dyck_associated(order):
    return U.dot_x(dyck_gamma_star(order))


@lru_cache(maxsize=None)
def dyck_s_poly(n, order=DEFAULT_ORDER):
    """``s_n(x) = sum_k binom(n,k) (n-k)! ((x-k)/x) (x.gamma*)^k``.

    ``(x.gamma*)^k`` is divisible by ``x`` for ``k >= 1``, so the quotient is
    taken exactly.
    """
    _need(n, order)
    assoc = _dyck_associated(order)
    out = Poly()
    for k in range(n + 1):
        p_k = _as_poly(assoc.moment(k))
        term = p_k if k == 0 else (X - k) * (p_k / X)
        out = out + factorial(n) // factorial(k) * term
    return out


def dyck_count(n, m, order=DEFAULT_ORDER):
    """``D(n, m)``: ballot paths to ``(n, m)`` avoiding ``urru``."""
    if not (0 <= n <= m):
        raise PreconditionFailed(f"dyck_count needs 0 <= n <= m, got n={n}, m={m}")
    _need(n, order)
    expr = U.Sum((
        U.Leaf(U.special("ubar", order)),
        U.Leaf(_dyck_zeta_umbra(order)),
        U.Leaf(U.dot_int(m, dyck_gamma_star(order))),
    ))
    s_umbral = U.evaluate(expr, n)
    s_alt = dyck_s_poly(n, order)(m)
    _agree(f"D({n},{m})", Fraction(s_umbral), s_alt)
    value = Fraction(s_umbral) / factorial(n)
    if value.denominator != 1:
        raise NonIntegerCount(f"D({n},{m}) = {value} is not an integer")
    return value.numerator


def dyck_table(M, order=DEFAULT_ORDER):
    return {(n, m): dyck_count(n, m, order) for m in range(M + 1) for n in range(m + 1)}


def dyck_recurrence_holds(M, order=DEFAULT_ORDER):
    """``D(n,m) - D(n-1,m) = D(n,m-1) - D(n-2,m-1) + D(n-3,m-1)`` for ``n < m <= M``.

    Counts at negative indices are zero.
    """
    table = dyck_table(M, order)

    def d(n, m):
        return table.get((n, m), 0) if n >= 0 else 0

    return all(
        d(n, m) - d(n - 1, m) == d(n, m - 1) - d(n - 2, m - 1) + d(n - 3, m - 1)
        for m in range(1, M + 1)
        for n in range(m)
    )


def dyck_polynomial_recurrence(n, order=DEFAULT_ORDER):
    """Residual of ``s_n(x) - n s_{n-1}(x) = s_n(x-1) - (n)_2 s_{n-2}(x-1) + (n)_3 s_{n-3}(x-1)``."""

    def s(k):
        return dyck_s_poly(k, order) if k >= 0 else Poly()

    lhs = s(n) - n * s(n - 1)
    rhs = s(n).shift(-1) - n * (n - 1) * s(n - 2).shift(-1) + n * (n - 1) * (n - 2) * s(n - 3).shift(-1)
    return lhs - rhs


# closing propositions


def _eta(gamma):
    """Umbra with ``eta^k = (gamma^<-1>)^(k+1)``; one order shorter than ``gamma``."""
    inv = U.comp_inverse_umbra(gamma)
    return U.from_moments([1] + [inv.moment(k + 1) for k in range(1, gamma.order)], "eta")


def _require_unit_mean(gamma):
    if gamma.moment(1) != 1:
        raise PreconditionFailed(f"needs E[gamma] = 1, got {gamma.moment(1)}")


def check_prop_reci(gamma, n):
    """``(x.gamma*)^n = x (eta + x.gamma*)^(n-1)`` for ``n >= 1``."""
    _require_unit_mean(gamma)
    if n < 1:
        raise PreconditionFailed("needs n >= 1")
    assoc = U.dot_x(U.adjoint(gamma))
    eta = _eta(gamma)
    lhs = _as_poly(assoc.moment(n))
    rhs = X * _as_poly(U.evaluate(U.Leaf(eta) + U.Leaf(assoc), n - 1))
    return CheckResult(lhs == rhs, None if lhs == rhs else {"lhs": lhs, "rhs": rhs})


def final_theorem_umbra(gamma, c):
    """``chi.c.bell.D(eta)``, whose gf is ``1 + c t f(eta, t)``."""
    eta = _eta(gamma)
    order = eta.order
    chi, bell = U.special("chi", order), U.special("bell", order)
    built = U.dot_umbra(U.dot_umbra(U.dot_umbra(chi, U.constant(c, order)), bell), U.derivative(eta))
    expected = 1 + eta.gf.mul_t().scale(Fraction(c))
    if built.gf != expected:
        raise RouteMismatch("chi.c.bell.D(eta) does not have gf 1 + c t f(eta, t)")
    return built


def check_final_theorem(gamma, c, n):
    """``x (chi.c.bell.D(eta) + x.gamma*)^n = (x + c n)(x.gamma*)^n``."""
    _require_unit_mean(gamma)
    c = Fraction(c)
    lead = final_theorem_umbra(gamma, c)
    assoc = U.dot_x(U.adjoint(gamma))
    lhs = X * _as_poly(U.evaluate(U.Leaf(lead) + U.Leaf(assoc), n))
    rhs = (X + c * n) * _as_poly(assoc.moment(n))
    return CheckResult(lhs == rhs, None if lhs == rhs else {"lhs": lhs, "rhs": rhs})


SOLUTIONS = {
    "integral": RecurrenceSolution("integral", solve_integral_case, "ubar + (iota + x.u).chi"),
    "pascal": RecurrenceSolution("pascal", solve_pascal_case, "ubar.bell.D(delta) + (x+n-1).chi"),
    "fibonacci": RecurrenceSolution("fibonacci", solve_fibonacci_case, "delta + x.chi"),
    "dyck": RecurrenceSolution("dyck", dyck_s_poly, "ubar + zeta + x.gstar"),
}
