"""Umbrae, auxiliary umbrae and the evaluation functional.

An :class:`Umbra` is identified operationally by its exponential generating
function ``f(alpha, t) = 1 + sum a_n t^n / n!`` truncated at a fixed order;
two umbrae are similar exactly when these series agree.  Every constructor
here works at the level of generating functions:

=====================  ==========================================
``add(a, g)``          ``f(a, t) f(g, t)``
``scale(c, a)``        ``f(a, c t)``
``dot_int(n, a)``      ``f(a, t) ** n``
``dot_x(a)``           ``f(a, t) ** x``
``dot_umbra(g, a)``    ``f(g, log f(a, t))``
``partition(a)``       ``exp(f(a, t) - 1)``
``compose_umbra(g,a)`` ``f(g, f(a, t) - 1)``
``adjoint(g)``         ``exp(f^<-1>(g, t) - 1)``
``derivative(g)``      ``1 + t f(g, t)``
=====================  ==========================================

:class:`UmbralExpr` trees are evaluated by :func:`evaluate` along two routes,
a multinomial expansion over uncorrelated summands and a plain coefficient
extraction from the expression's generating function.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .bellpoly import MomentSeq, gf_from_moments, moments_from_gf
from .errors import (
    BadConstantTerm,
    NonInvertible,
    OrderExceeded,
    RouteMismatch,
    UnknownName,
    ZeroLinearCoefficient,
)
from .series import DEFAULT_ORDER, ONE, ZERO, Poly, Series, X, as_rational, format_rational

_id_counter = itertools.count(1)
_id_lock = threading.Lock()


def _fresh_id():
    with _id_lock:
        return next(_id_counter)


@dataclass(frozen=True, eq=False)
class Umbra:
    gf: Series
    descriptor: str = "anon"
    id: int = field(default_factory=_fresh_id)

    def __post_init__(self):
        if self.gf.coeff(0) != 1:
            raise BadConstantTerm("an umbra's generating function has constant term 1")

    @property
    def order(self):
        return self.gf.order

    def moment(self, n):
        if n > self.order:
            raise OrderExceeded(f"moment {n} requested from an umbra of order {self.order}")
        return factorial(n) * self.gf.coeff(n)

    def moments(self):
        return moments_from_gf(self.gf)

    def fresh(self):
        """A similar but uncorrelated copy."""
        return Umbra(self.gf, self.descriptor)

    def is_polynomial(self):
        return self.gf.is_polynomial_ring()

    def __str__(self):
        return self.descriptor

    def __repr__(self):
        return f"Umbra({self.descriptor!r}, id={self.id}, order={self.order})"


def _paren(desc):
    return desc if desc.replace("_", "").isalnum() else f"({desc})"


# catalogue

def _iota_gf(order):
    # t / (e^t - 1); build one order deeper so the division by t keeps `order`
    e = Series.exponential(1, order + 1)
    return (e - 1).div_t().recip()


_SPECIAL_GF = {
    "epsilon": lambda N: Series.one(N),
    "u": lambda N: Series.exponential(1, N),
    "chi": lambda N: Series((1, 1), N),
    "bell": lambda N: (Series.exponential(1, N) - 1).exp(),
    "iota": _iota_gf,
    "ubar": lambda N: (1 - Series.t(N)).recip(),
    "delta": lambda N: (1 - Series.t(N) - Series((0, 0, 1), N)).recip(),
}

ALIASES = {
    "eps": "epsilon",
    "augmentation": "epsilon",
    "unity": "u",
    "singleton": "chi",
    "beta": "bell",
    "bernoulli": "iota",
    "fibonacci": "delta",
}

SPECIAL_NAMES = tuple(_SPECIAL_GF)


def special(name, order=DEFAULT_ORDER):
    key = ALIASES.get(name, name)
    try:
        build = _SPECIAL_GF[key]
    except KeyError:
        raise UnknownName(f"unknown special umbra {name!r}") from None
    return Umbra(build(order), key)


def from_gf(f, descriptor="anon"):
    return Umbra(f, descriptor)


def from_moments(a, descriptor="anon"):
    return Umbra(gf_from_moments(a), descriptor)


def constant(c, order=DEFAULT_ORDER):
    """The scalar umbra with moments ``c**n`` (``c`` rational or a Poly)."""
    return Umbra(Series.exponential(c, order), format_rational(c) if not isinstance(c, Poly) else str(c))


def moment(alpha, n):
    return alpha.moment(n)


def gf(alpha):
    return alpha.gf


def similar(alpha, gamma):
    return alpha.gf == gamma.gf


# auxiliary umbrae

def add(alpha, gamma):
    return Umbra(alpha.gf * gamma.gf, f"{alpha} + {gamma}")


def scale(c, alpha):
    c = as_rational(c)
    desc = f"-{_paren(str(alpha))}" if c == -1 else f"{_paren(str(alpha))}.{format_rational(c)}"
    return Umbra(alpha.gf.subs_scale(c), desc)


def dot_int(n, alpha):
    return Umbra(alpha.gf ** n, f"{n}.{_paren(str(alpha))}")


def dot_x(alpha):
    return Umbra(alpha.gf.pow_x(), f"x.{_paren(str(alpha))}")


def _dot_gf(outer, inner):
    return outer.compose(inner.log())


def dot_umbra(gamma, alpha):
    return Umbra(_dot_gf(gamma.gf, alpha.gf), f"{_paren(str(gamma))}.{_paren(str(alpha))}")


def partition(alpha):
    return Umbra((alpha.gf - 1).exp(), f"bell.{_paren(str(alpha))}")


def compose_umbra(gamma, alpha):
    return Umbra(gamma.gf.compose(alpha.gf - 1), f"{_paren(str(gamma))}.bell.{_paren(str(alpha))}")


def _inverse_gf(f):
    try:
        return 1 + (f - 1).comp_inverse()
    except ZeroLinearCoefficient:
        raise NonInvertible("umbra has zero first moment") from None


def comp_inverse_umbra(alpha):
    return Umbra(_inverse_gf(alpha.gf), f"inv({alpha})")


def _adjoint_gf(f):
    return (_inverse_gf(f) - 1).exp()


def adjoint(gamma):
    return Umbra(_adjoint_gf(gamma.gf), f"adj({gamma})")


def _derivative_gf(f):
    return 1 + f.mul_t()


def derivative(gamma):
    return Umbra(_derivative_gf(gamma.gf), f"D({gamma})")


# expressions


@dataclass(frozen=True)
class UmbralExpr:
    def __add__(self, other):
        return Sum((self, _as_expr(other)))

    def __radd__(self, other):
        return Sum((_as_expr(other), self))

    def __neg__(self):
        return Scale(Fraction(-1), self)

    def dot(self, other):
        return Dot(self, _as_expr(other))

    def __str__(self):
        from .dsl import to_source

        return to_source(self)


@dataclass(frozen=True)
class Leaf(UmbralExpr):
    umbra: Umbra = field(compare=False)
    name: str = None
    span: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.name is None:
            object.__setattr__(self, "name", str(self.umbra))


@dataclass(frozen=True)
class Var(UmbralExpr):
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Const(UmbralExpr):
    value: Fraction = ZERO
    span: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))


@dataclass(frozen=True)
class Sum(UmbralExpr):
    terms: tuple = ()
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Scale(UmbralExpr):
    factor: Fraction = ONE
    arg: UmbralExpr = None
    span: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "factor", as_rational(self.factor))


@dataclass(frozen=True)
class Dot(UmbralExpr):
    left: UmbralExpr = None
    right: UmbralExpr = None
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Adjoint(UmbralExpr):
    arg: UmbralExpr = None
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class CompInverse(UmbralExpr):
    arg: UmbralExpr = None
    span: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Derivative(UmbralExpr):
    arg: UmbralExpr = None
    span: tuple = field(default=None, compare=False, repr=False)


def _as_expr(e):
    if isinstance(e, UmbralExpr):
        return e
    if isinstance(e, Umbra):
        return Leaf(e)
    if isinstance(e, Poly) and e == X:
        return Var()
    return Const(as_rational(e))


def _children(e):
    if isinstance(e, Sum):
        return e.terms
    if isinstance(e, Dot):
        return (e.left, e.right)
    if isinstance(e, (Scale, Adjoint, CompInverse, Derivative)):
        return (e.arg,)
    return ()


def expr_order(e, default=DEFAULT_ORDER):
    """Smallest truncation order among the leaves (``default`` if there are none)."""
    orders = []
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            orders.append(node.umbra.order)
        stack.extend(_children(node))
    return min(orders) if orders else default


def _linear_parts(e):
    """Split ``e`` into a scalar part and grouped uncorrelated summands.

    Returns ``(scalar, atoms)`` where ``scalar`` is a Poly in ``x`` and
    ``atoms`` is a list of ``[coefficient, base]``.  Repeated occurrences of
    the same leaf umbra (or the same node object) are correlated and share a
    single entry; everything else is a fresh uncorrelated summand.
    """
    scalar = Poly()
    groups = {}

    def walk(node, c):
        nonlocal scalar
        if isinstance(node, Sum):
            for term in node.terms:
                walk(term, c)
        elif isinstance(node, Scale):
            walk(node.arg, c * node.factor)
        elif isinstance(node, Var):
            scalar = scalar + c * X
        elif isinstance(node, Const):
            scalar = scalar + c * node.value
        else:
            key = ("leaf", node.umbra.id) if isinstance(node, Leaf) else ("node", id(node))
            if key in groups:
                groups[key][0] += c
            else:
                groups[key] = [c, node]

    walk(e, ONE)
    return scalar, [g for g in groups.values() if g[0] != 0]


def expr_gf(e, order=None):
    """Generating function of an expression, truncated at ``order``."""
    e = _as_expr(e)
    if order is None:
        order = expr_order(e)
    return _gf(e, order)


def _gf(e, order, memo=None):
    if memo is not None:
        hit = memo.get(id(e))
        if hit is not None:
            return hit
    out = _gf_uncached(e, order, memo)
    if memo is not None:
        memo[id(e)] = out
    return out


def _gf_uncached(e, order, memo):
    if isinstance(e, Leaf):
        return e.umbra.gf.truncate(min(order, e.umbra.order))
    if isinstance(e, Dot):
        return _dot_gf(_gf(e.left, order, memo), _gf(e.right, order, memo))
    if isinstance(e, Adjoint):
        return _adjoint_gf(_gf(e.arg, order, memo))
    if isinstance(e, CompInverse):
        return _inverse_gf(_gf(e.arg, order, memo))
    if isinstance(e, Derivative):
        return _derivative_gf(_gf(e.arg, order, memo))
    if isinstance(e, (Sum, Scale, Var, Const)):
        scalar, atoms = _linear_parts(e)
        out = Series.exponential(_simplify_scalar(scalar), order)
        for c, base in atoms:
            out = out * _gf(base, order, memo).subs_scale(c)
        return out
    raise TypeError(f"not an umbral expression: {e!r}")


def _simplify_scalar(p):
    return p.constant_term() if p.is_constant() else p


def expr_umbra(e, order=None):
    """Materialize an expression as an :class:`Umbra`."""
    e = _as_expr(e)
    return Umbra(expr_gf(e, order), str(e))


def _binomial_convolve(a, b, n):
    """Moments of the sum of two uncorrelated umbrae, up to index ``n``."""
    return [sum((comb(k, j) * a[j] * b[k - j] for j in range(k + 1)), ZERO) for k in range(n + 1)]


def _multinomial_route(e, n, order, memo=None):
    scalar, atoms = _linear_parts(e)
    s = _simplify_scalar(scalar)
    acc = [ONE]
    for k in range(1, n + 1):
        acc.append(acc[-1] * s)
    for c, base in atoms:
        f = _gf(base, order, memo)
        moms, power = [], ONE
        for k in range(n + 1):
            moms.append(power * factorial(k) * f.coeff(k))
            power = power * c
        acc = _binomial_convolve(acc, moms, n)
    return acc[n]


def evaluate(e, n, check=True):
    """``E[e**n]`` for an expression (or a bare umbra).

    With ``check`` set, the multinomial route and the generating-function
    route are both computed and must agree.
    """
    e = _as_expr(e)
    order = expr_order(e)
    if n < 0:
        raise ValueError("power must be nonnegative")
    if n > order:
        raise OrderExceeded(f"E[e^{n}] needs order >= {n}, expression has order {order}")
    memo = {}
    value = _multinomial_route(e, n, order, memo)
    if check:
        other = factorial(n) * _gf(e, order, memo).coeff(n)
        if value != other:
            raise RouteMismatch(f"multinomial route gave {value}, gf route gave {other}")
    return value


def evaluate_moments(e, n, check=True):
    return MomentSeq(evaluate(e, k, check) for k in range(n + 1))
