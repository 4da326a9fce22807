"""Exact coefficient rings and truncated formal power series.

Two coefficient rings are supported: the rationals (``fractions.Fraction``)
and :class:`Poly`, univariate polynomials in ``x`` over the rationals.  A
:class:`Series` stores ``order + 1`` coefficients ``c_0 .. c_order`` and every
binary operation truncates to the smaller order of its operands.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import (
    BadConstantTerm,
    NonzeroInnerConstant,
    OrderExceeded,
    ZeroConstantTerm,
    ZeroLinearCoefficient,
)

DEFAULT_ORDER = 16

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value):
    """Coerce an int or Fraction to Fraction; anything else raises TypeError."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _is_scalar(value):
    return isinstance(value, (int, Fraction, _RationalABC)) and not isinstance(value, bool)


class Poly:
    """Polynomial in ``x`` with rational coefficients, lowest degree first.

    Instances are immutable and kept in canonical form (no trailing zeros).
    The zero polynomial has degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Fraction else as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return cls((other,))
        return None

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash(self.coeffs)

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            c = as_rational(other)
            return Poly([c * a for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            c = as_rational(other)
            if c == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly([a / c for a in self.coeffs])
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if r:
                raise ValueError("polynomial division is not exact")
            return q
        return NotImplemented

    def __divmod__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.coeffs[-1]
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        """Horner evaluation at a rational point or substitution of a Poly."""
        if not isinstance(value, Poly):
            value = as_rational(value)
            acc = ZERO
        else:
            acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, a):
        """Return ``p(x + a)``."""
        return self(Poly((a, 1)))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = format_rational(mag)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{mono}"
                else:
                    body = f"({format_rational(mag)}){mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = Poly.x()


def format_rational(q):
    q = as_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_value(v):
    """Render a ring element: rationals as ``p/q``, polynomials in ``x``."""
    if isinstance(v, Poly):
        return str(v)
    return format_rational(v)


def _normalize(c):
    if isinstance(c, Poly):
        return c
    return as_rational(c)


def _scalar_inverse(c):
    """Inverse of a ring element that must be a nonzero rational constant."""
    if isinstance(c, Poly):
        if not c.is_constant():
            raise BadConstantTerm("constant term must be a rational constant, got " + str(c))
        c = c.constant_term()
    if c == 0:
        raise ZeroConstantTerm("constant term is zero")
    return 1 / c


class Series:
    """Truncated formal power series ``c_0 + c_1 t + ... + c_N t^N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        cs = [_normalize(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
        else:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # constructors

    @classmethod
    def _raw(cls, coeffs):
        """Wrap already-normalized coefficients without copying checks."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls((), order)

    @classmethod
    def one(cls, order=DEFAULT_ORDER):
        return cls((1,), order)

    @classmethod
    def t(cls, order=DEFAULT_ORDER):
        return cls((0, 1), order)

    @classmethod
    def constant(cls, c, order=DEFAULT_ORDER):
        return cls((c,), order)

    @classmethod
    def exponential(cls, c=1, order=DEFAULT_ORDER):
        """``exp(c t)``; ``c`` may be a rational or a Poly."""
        coeffs = [ONE]
        power = ONE
        fact = 1
        for n in range(1, order + 1):
            power = power * c
            fact *= n
            coeffs.append(power / fact)
        return cls(coeffs, order)

    # basic access

    @property
    def order(self):
        return len(self.coeffs) - 1

    def coeff(self, n):
        if n < 0:
            raise IndexError("negative coefficient index")
        if n > self.order:
            raise OrderExceeded(f"coefficient {n} requested from a series of order {self.order}")
        return self.coeffs[n]

    def __getitem__(self, n):
        return self.coeff(n)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def is_polynomial_ring(self):
        return any(isinstance(c, Poly) for c in self.coeffs)

    def truncate(self, order):
        if order > self.order:
            raise OrderExceeded(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))

    __hash__ = None

    def __repr__(self):
        return f"Series([{', '.join(format_value(c) for c in self.coeffs)}], order={self.order})"

    # ring structure

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if _is_scalar(other) or isinstance(other, Poly):
            return Series.constant(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return Series._raw([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs[: n + 1])])

    __radd__ = __add__

    def __neg__(self):
        return Series._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c):
        """Multiply every coefficient by the ring element ``c``."""
        return Series._raw([c * a for a in self.coeffs])

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, Poly):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(1 / as_rational(other))
        if isinstance(other, Series):
            return self * other.recip()
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.recip()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("use pow_x for symbolic exponents")
        base = self if k >= 0 else self.recip()
        k = abs(k)
        result = Series.one(self.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def recip(self):
        inv0 = _scalar_inverse(self.coeffs[0])
        a = self.coeffs
        b = [inv0]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + a[k] * b[n - k]
            b.append(-inv0 * acc)
        return Series(b, self.order)

    def mul_t(self):
        """Multiply by ``t`` keeping the same order."""
        return Series((ZERO,) + self.coeffs[:-1], self.order)

    def div_t(self):
        """Divide by ``t``; the constant term must vanish and one order is lost."""
        if self.coeffs[0]:
            raise BadConstantTerm("series is not divisible by t")
        if self.order == 0:
            raise OrderExceeded("cannot divide an order-0 series by t")
        return Series(self.coeffs[1:], self.order - 1)

    def subs_scale(self, c):
        """Substitute ``c t`` for ``t``."""
        out, power = [], ONE
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return Series(out, self.order)

    def compose(self, inner):
        """``self(inner(t))``; ``inner`` must have zero constant term.

        Powers of ``inner`` are formed once and combined as ``sum f_k inner^k``,
        which keeps polynomial outer coefficients out of the convolutions.
        """
        if inner.coeffs[0]:
            raise NonzeroInnerConstant("inner series must have zero constant term")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        f = self.coeffs
        out = [f[0]] + [ZERO] * n
        power = g
        for k in range(1, n + 1):
            if f[k]:
                pc = power.coeffs
                for j in range(k, n + 1):
                    if pc[j]:
                        out[j] = out[j] + f[k] * pc[j]
            if k < n:
                power = power * g
        return Series._raw(out)
    def exp(self):
        if self.coeffs[0]:
            raise BadConstantTerm("exp needs a zero constant term")
        a = self.coeffs
        b = [Poly((1,)) if self.is_polynomial_ring() else ONE]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if a[k]:
                    acc = acc + k * a[k] * b[n - k]
            b.append(acc / n)
        return Series(b, self.order)

    def log(self):
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        a = self.coeffs
        lg = [ZERO]
        for n in range(1, self.order + 1):
            acc = n * a[n]
            for k in range(1, n):
                if lg[k] and a[n - k]:
                    acc = acc - k * lg[k] * a[n - k]
            lg.append(acc / n)
        return Series(lg, self.order)

    def comp_inverse(self):
        """Compositional inverse by Lagrange inversion.

        ``[t^n] g = (1/n) [t^(n-1)] (t / f(t))^n``.
        """
        if self.coeffs[0]:
            raise BadConstantTerm("compositional inverse needs a zero constant term")
        if self.order == 0:
            return Series.zero(0)
        if not self.coeffs[1]:
            raise ZeroLinearCoefficient("linear coefficient is zero")
        h = self.div_t().recip()
        out = [ZERO]
        hp = h
        for n in range(1, self.order + 1):
            out.append(hp.coeffs[n - 1] / n)
            if n < self.order:
                hp = hp * h
        return Series(out, self.order)

    def pow_x(self):
        """``self ** x`` as a series over Poly, i.e. ``exp(x log self)``."""
        if self.is_polynomial_ring():
            raise TypeError("pow_x needs a series over the rationals")
        if self.coeffs[0] != 1:
            raise BadConstantTerm("pow_x needs constant term 1")
        return self.log().scale(X).exp()

    def at_x(self, r):
        """Evaluate every polynomial coefficient at ``x = r``."""
        return Series([c(r) if isinstance(c, Poly) else c for c in self.coeffs], self.order)


# functional surface


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def negate(a):
    return -a


def scale(c, a):
    return a.scale(c)


def mul(a, b):
    return a * b


def recip(a):
    return a.recip()


def compose(f, g):
    return f.compose(g)


def exp(a):
    return a.exp()


def log(a):
    return a.log()


def comp_inverse(a):
    return a.comp_inverse()


def pow_x(a):
    return a.pow_x()


def coeff(a, n):
    return a.coeff(n)


def eval_poly_at(p, r):
    if not isinstance(p, Poly):
        return as_rational(p)
    return p(r)


def binomial_poly(p, k):
    """``binom(p, k)`` for a Poly (or rational) top argument and integer ``k``."""
    if k < 0:
        return Poly()
    out = Poly((1,))
    for i in range(k):
        out = out * (p - i) / (i + 1)
    return out
