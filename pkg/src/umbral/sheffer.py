"""Sheffer umbrae ``sigma_x = alpha + x.gamma*`` and identity checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, factorial

from .errors import NonInvertibleGamma, OrderExceeded, RouteMismatch
from .series import ZERO, Poly
from .umbra import Umbra, adjoint, dot_umbra, special


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check; falsy on failure, with a witness."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def _as_poly(v):
    return v if isinstance(v, Poly) else Poly((v,))


@dataclass(frozen=True, eq=False)
class ShefferUmbra:
    alpha: Umbra
    gamma: Umbra
    gamma_star: Umbra
    order: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @cached_property
    def gf(self):
        """``f(alpha, t) * f(gamma*, t) ** x``."""
        return self.alpha.gf.truncate(self.order) * self.associated_gf

    @cached_property
    def associated_gf(self):
        return self.gamma_star.gf.truncate(self.order).pow_x()

    @cached_property
    def inverse_shift(self):
        """``f^<-1>(gamma, t) - 1``, which equals ``log f(gamma*, t)``."""
        return self.gamma_star.gf.truncate(self.order).log()

    def associated(self, n):
        """``p_n(x)``, the n-th moment of ``x.gamma*``."""
        self._check_order(n)
        return _as_poly(factorial(n) * self.associated_gf.coeff(n))

    def moment_poly(self, n):
        return moment_poly(self, n)

    def at(self, value):
        """Specialize ``x`` to a rational value, giving a scalar umbra."""
        return Umbra(self.gf.at_x(value), f"sigma_{value}")

    def subscript(self, eta):
        """``sigma_eta``, generating function ``f(alpha, t) f(eta, f^<-1>(gamma, t) - 1)``."""
        n = min(self.order, eta.order)
        f = self.alpha.gf.truncate(n) * eta.gf.truncate(n).compose(self.inverse_shift.truncate(n))
        return Umbra(f, f"sigma_({eta})")

    def _check_order(self, n):
        if n > self.order:
            raise OrderExceeded(f"moment {n} requested from a Sheffer umbra of order {self.order}")


def make_sheffer(alpha, gamma):
    if gamma.moment(1) == 0:
        raise NonInvertibleGamma("gamma must have a nonzero first moment")
    order = min(alpha.order, gamma.order)
    return ShefferUmbra(alpha, gamma, adjoint(gamma), order)


def associated_umbra(gamma):
    return make_sheffer(special("epsilon", gamma.order), gamma)


def moment_poly(sigma, n):
    """``s_n(x)``, computed by binomial expansion and checked against the gf."""
    sigma._check_order(n)
    if n in sigma._cache:
        return sigma._cache[n]
    expanded = Poly()
    for k in range(n + 1):
        a_k = sigma.alpha.moment(k)
        if a_k:
            expanded = expanded + comb(n, k) * a_k * sigma.associated(n - k)
    direct = _as_poly(factorial(n) * sigma.gf.coeff(n))
    if expanded != direct:
        raise RouteMismatch(f"s_{n}: binomial expansion {expanded} != generating function {direct}")
    sigma._cache[n] = expanded
    return expanded


def _grid(deg):
    xs = [Fraction(i - deg // 2) for i in range(deg + 1)]
    ys = [Fraction(2 * j + 1, 3) for j in range(deg + 1)]
    return xs, ys


def _shift_identity(n, lhs, left, right):
    """Check ``lhs_n(x+y) == sum_k binom(n,k) left_k(x) right_{n-k}(y)`` on a grid."""
    target = _as_poly(lhs(n))
    lpolys = [_as_poly(left(k)) for k in range(n + 1)]
    rpolys = [_as_poly(right(k)) for k in range(n + 1)]
    deg = max(max(p.degree for p in [target] + lpolys + rpolys), 0)
    xs, ys = _grid(deg)
    for x in xs:
        lv = [p(x) for p in lpolys]
        for y in ys:
            got = sum((comb(n, k) * lv[k] * rpolys[n - k](y) for k in range(n + 1)), ZERO)
            want = target(x + y)
            if got != want:
                return CheckResult(False, {"n": n, "x": x, "y": y, "lhs": want, "rhs": got})
    return CheckResult(True)


def check_sheffer_identity(sigma, n, s=None, p=None):
    """``s_n(x+y) = sum_k binom(n,k) s_k(x) p_{n-k}(y)``.

    ``s`` and ``p`` may override the moment sequences (for negative controls).
    """
    s = s or sigma.moment_poly
    p = p or sigma.associated
    return _shift_identity(n, s, s, p)


def check_binomial_identity(gamma, n, p=None):
    """``p_n(x+y) = sum_k binom(n,k) p_k(x) p_{n-k}(y)`` for the associated sequence."""
    if gamma.moment(1) == 0:
        raise NonInvertibleGamma("gamma must have a nonzero first moment")
    if p is None:
        p = associated_umbra(gamma).associated
    return _shift_identity(n, p, p, p)


def check_generalized_sheffer(sigma, eta, zeta, n):
    """``E[sigma_{eta+zeta}^n] == E[(sigma_eta + zeta.gamma*)^n]``.

    The left side substitutes the gf of ``eta + zeta`` into the Sheffer gf;
    the right side convolves the moments of ``sigma_eta`` with those of the
    dot product ``zeta.gamma*`` built independently.
    """
    order = min(sigma.order, eta.order, zeta.order)
    if n > order:
        raise OrderExceeded(f"n={n} exceeds order {order}")
    shift = sigma.inverse_shift.truncate(order)
    joint = eta.gf.truncate(order) * zeta.gf.truncate(order)
    lhs_gf = sigma.alpha.gf.truncate(order) * joint.compose(shift)

    sig_eta = sigma.subscript(eta)
    zg = dot_umbra(zeta, sigma.gamma_star)
    for k in range(n + 1):
        lhs = factorial(k) * lhs_gf.coeff(k)
        rhs = sum((comb(k, j) * sig_eta.moment(j) * zg.moment(k - j) for j in range(k + 1)), ZERO)
        if lhs != rhs:
            return CheckResult(False, {"k": k, "lhs": lhs, "rhs": rhs})
    return CheckResult(True)

