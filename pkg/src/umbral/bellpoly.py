"""Partial Bell polynomials and conversion between moments and generating functions."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import BadConstantTerm, IndexOutOfRange
from .series import ONE, ZERO, Poly, Series, _normalize


class MomentSeq:
    """A unital moment sequence ``a_0 = 1, a_1, ..., a_N``."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(_normalize(v) for v in values)
        if not vals or vals[0] != 1:
            raise BadConstantTerm("moment sequences start with a_0 = 1")
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("MomentSeq is immutable")

    @property
    def order(self):
        return len(self.values) - 1

    def __getitem__(self, n):
        if isinstance(n, slice):
            return list(self.values[n])
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, MomentSeq):
            return self.values == other.values
        if isinstance(other, (list, tuple)):
            return len(other) == len(self.values) and all(a == b for a, b in zip(self.values, other))
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"MomentSeq({[str(v) for v in self.values]})"


def bell_table(a, imax):
    """All ``B_{i,j}`` for ``0 <= j <= i <= imax`` as a nested list.

    Uses ``B_{i,j} = sum_k binom(i-1, k-1) a_k B_{i-k, j-1}`` with
    ``B_{0,0} = 1``.
    """
    if imax >= len(a):
        raise IndexOutOfRange(f"need moments up to a_{imax}, have {len(a) - 1}")
    table = [[ONE]]
    for i in range(1, imax + 1):
        row = [ZERO] * (i + 1)
        for j in range(1, i + 1):
            acc = ZERO
            for k in range(1, i - j + 2):
                prev = table[i - k][j - 1] if j - 1 <= i - k else ZERO
                if prev and a[k]:
                    acc = acc + comb(i - 1, k - 1) * a[k] * prev
            row[j] = acc
        table.append(row)
    return table


def partial_bell(i, j, a):
    if not (0 <= j <= i):
        raise IndexOutOfRange(f"partial_bell needs 0 <= j <= i, got i={i}, j={j}")
    if j == 0:
        return ONE if i == 0 else ZERO
    if i - j + 1 >= len(a):
        raise IndexOutOfRange(f"B_{{{i},{j}}} needs a_1..a_{i - j + 1}")
    memo = {}

    def b(p, q):
        if q == 0:
            return ONE if p == 0 else ZERO
        if p < q:
            return ZERO
        key = (p, q)
        if key not in memo:
            acc = ZERO
            for k in range(1, p - q + 2):
                if a[k]:
                    acc = acc + comb(p - 1, k - 1) * a[k] * b(p - k, q - 1)
            memo[key] = acc
        return memo[key]

    return b(i, j)


def moments_from_gf(f: Series) -> MomentSeq:
    if f.coeff(0) != 1:
        raise BadConstantTerm("generating function must have constant term 1")
    return MomentSeq(factorial(n) * c for n, c in enumerate(f.coeffs))


def gf_from_moments(a) -> Series:
    if not isinstance(a, MomentSeq):
        a = MomentSeq(a)
    return Series([Fraction(1, factorial(n)) * v for n, v in enumerate(a.values)], a.order)


def partition_poly(i, a) -> Poly:
    """``sum_j x^j B_{i,j}(a_1, ...)``, the i-th moment of ``x.beta.alpha``."""
    if i < 0:
        raise IndexOutOfRange("partition_poly needs i >= 0")
    if i == 0:
        return Poly((1,))
    row = bell_table(a, i)[i]
    return Poly(row)
