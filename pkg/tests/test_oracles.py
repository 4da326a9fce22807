from fractions import Fraction as F
from itertools import product
from math import comb

import pytest

from umbral import oracles
from umbral.errors import TooLarge
from umbral.oracles import PathSpec, count_ballot_paths
from umbral.series import X, Poly


def test_ballot_examples():
    for m in range(8):
        assert count_ballot_paths(0, m) == 1
    assert count_ballot_paths(2, 2) == 2
    assert count_ballot_paths(PathSpec(4, 6)) == 46
    assert count_ballot_paths(3, 2) == 0
    assert count_ballot_paths(-1, 2) == 0


def test_ballot_against_naive_enumeration():
    def naive(n, m, pat):
        total = 0
        for steps in product("ur", repeat=n + m):
            s = "".join(steps)
            if s.count("r") != n or pat in s:
                continue
            if all(s[:k].count("u") >= s[:k].count("r") for k in range(len(s) + 1)):
                total += 1
        return total

    for m in range(6):
        for n in range(m + 1):
            for pat in ("urru", "ru", "uu"):
                assert count_ballot_paths(n, m, pat) == naive(n, m, pat)


def test_ballot_without_pattern_is_catalan_triangle():
    # "rrrrrrrrr" cannot occur below 9 steps: plain ballot numbers
    for m in range(6):
        for n in range(m + 1):
            want = (m - n + 1) * comb(n + m, n) // (m + 1)
            assert count_ballot_paths(n, m, "r" * 9) == want


def test_degenerate_patterns():
    assert count_ballot_paths(0, 0, "u") == 1
    assert count_ballot_paths(0, 1, "u") == 0
    assert count_ballot_paths(1, 1, "u") == 0


def test_ballot_guards():
    with pytest.raises(TooLarge):
        count_ballot_paths(14, 14)
    with pytest.raises(ValueError):
        PathSpec(1, 1, "uxr")


def test_sequences():
    assert [oracles.fibonacci(n) for n in range(6)] == [1, 1, 2, 3, 5, 8]
    assert oracles.bell_numbers(4) == [1, 1, 2, 5, 15]
    assert oracles.bernoulli_numbers(2) == [1, F(-1, 2), F(1, 6)]


def test_set_partitions():
    assert len(list(oracles.set_partitions(4))) == 15
    assert len(list(oracles.set_partitions(0))) == 1


def test_partial_bell_by_partitions():
    a = [1, F(2), F(3), F(5), F(7)]
    assert oracles.partial_bell_by_partitions(3, 2, a) == 3 * a[1] * a[2]
    assert oracles.partial_bell_by_partitions(4, 4, a) == a[1] ** 4
    assert oracles.partial_bell_by_partitions(4, 2, a) == 4 * a[1] * a[3] + 3 * a[2] ** 2
    with pytest.raises(TooLarge):
        oracles.partial_bell_by_partitions(13, 2, [1] * 14)


def test_integrate01():
    assert oracles.integrate01(Poly((1,))) == 1
    assert oracles.integrate01(X) == F(1, 2)
    assert oracles.integrate01(X * X - X) == F(-1, 6)
