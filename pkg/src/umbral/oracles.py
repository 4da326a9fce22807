"""Brute-force ground truth, independent of the umbral machinery.

Only the coefficient types from :mod:`umbral.series` are used here; nothing in
this module touches generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import TooLarge
from .series import Poly, as_rational

MAX_STEPS = 26
MAX_PARTITION_SIZE = 12


@dataclass(frozen=True)
class PathSpec:
    n: int
    m: int
    forbidden_pattern: str = "urru"

    def __post_init__(self):
        if not self.forbidden_pattern:
            raise ValueError("forbidden pattern must be nonempty")
        if set(self.forbidden_pattern) - {"u", "r"}:
            raise ValueError("pattern must use only the steps 'u' and 'r'")


def count_ballot_paths(spec, m=None, pattern="urru"):
    """Count u/r step strings ending at ``(n, m)`` that never go below the diagonal.

    ``n`` counts right steps and ``m`` up steps; every prefix must have at least
    as many ``u`` as ``r``, and the string may not contain ``pattern``.
    Accepts either a :class:`PathSpec` or ``(n, m[, pattern])``.
    """
    if not isinstance(spec, PathSpec):
        spec = PathSpec(spec, m, pattern)
    n, m, pat = spec.n, spec.m, spec.forbidden_pattern
    if n < 0 or m < 0:
        return 0
    if n + m > MAX_STEPS:
        raise TooLarge(f"{n + m} steps exceeds the enumeration guard of {MAX_STEPS}")
    tail_len = len(pat) - 1
    count = 0

    def walk(ups, rights, tail):
        nonlocal count
        if ups == m and rights == n:
            count += 1
            return
        if ups < m:
            s = tail + "u"
            if not s.endswith(pat):
                walk(ups + 1, rights, s[-tail_len:] if tail_len else "")
        if rights < n and rights + 1 <= ups:
            s = tail + "r"
            if not s.endswith(pat):
                walk(ups, rights + 1, s[-tail_len:] if tail_len else "")

    walk(0, 0, "")
    return count


def fibonacci(n):
    """Fibonacci numbers with ``F_0 = F_1 = 1``."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def bernoulli_numbers(N):
    """``B_0..B_N`` from ``sum_{k=0}^{m} binom(m+1, k) B_k = 0`` (so ``B_1 = -1/2``)."""
    B = [Fraction(1)]
    for m in range(1, N + 1):
        s = sum(comb(m + 1, k) * B[k] for k in range(m))
        B.append(-s / (m + 1))
    return B


def bell_numbers(N):
    """``B_0..B_N`` via the Bell triangle."""
    out = [1]
    row = [1]
    for _ in range(N):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        out.append(row[0])
    return out


def set_partitions(i):
    """Yield the set partitions of ``{0..i-1}`` as lists of blocks (restricted growth strings)."""
    if i == 0:
        yield []
        return
    rgs = [0] * i

    def rec(pos, maxval):
        if pos == i:
            blocks = [[] for _ in range(maxval + 1)]
            for idx, b in enumerate(rgs):
                blocks[b].append(idx)
            yield blocks
            return
        for v in range(maxval + 2):
            rgs[pos] = v
            yield from rec(pos + 1, max(maxval, v))

    rgs[0] = 0
    yield from rec(1, 0)


def partial_bell_by_partitions(i, j, a):
    if not (1 <= j <= i):
        raise ValueError(f"need 1 <= j <= i, got i={i}, j={j}")
    if i > MAX_PARTITION_SIZE:
        raise TooLarge(f"set partitions of {i} elements are too many to enumerate")
    total = Fraction(0)
    for blocks in set_partitions(i):
        if len(blocks) != j:
            continue
        prod = Fraction(1)
        for b in blocks:
            prod = prod * a[len(b)]
        total = total + prod
    return total


def integrate01(p):
    """Exact integral of a polynomial over ``[0, 1]``."""
    if not isinstance(p, Poly):
        return as_rational(p)
    return sum((c / (k + 1) for k, c in enumerate(p.coeffs)), Fraction(0))
