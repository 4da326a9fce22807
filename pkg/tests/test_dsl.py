from fractions import Fraction as F

import pytest

from umbral import umbra as U
from umbral.dsl import parse, to_source
from umbral.errors import DslSyntaxError, UnknownName
from umbral.series import Series

CORPUS = [
    "eps", "u", "chi", "bell", "iota", "ubar", "delta", "x", "3", "0",
    "-chi", "-3", "-(3)", "x.chi", "2.u", "-1.-chi", "chi.3",
    "u + chi", "u + chi + bell", "ubar + (iota + x.u).chi",
    "ubar.bell.D(delta) + (x + 3).chi", "delta + x.chi",
    "adj(u)", "inv(u)", "D(chi)", "D(D(chi))", "adj(inv(ubar + chi))",
    "(u + chi).bell", "u.(chi.bell)", "x.(u + chi)", "-(u + chi)",
    "ubar.bell.chi", "3.x.u", "1/2", "-1/3", "(2/3).chi",
    "x + 1", "-x + chi", "((u))",
]


@pytest.mark.parametrize("src", CORPUS)
def test_roundtrip(src):
    e = parse(src)
    printed = to_source(e)
    again = parse(printed)
    assert again == e
    assert to_source(again) == printed


@pytest.mark.parametrize("src", CORPUS)
def test_roundtrip_preserves_meaning(src):
    a = U.expr_gf(parse(src, 6), 6)
    b = U.expr_gf(parse(to_source(parse(src, 6)), 6), 6)
    assert a == b


def test_pascal_expression_parses():
    e = parse("ubar.bell.D(delta) + (x+3).chi")
    assert isinstance(e, U.Sum)
    assert isinstance(e.terms[0], U.Dot) and isinstance(e.terms[0].right, U.Derivative)


def test_negative_dot():
    e = parse("-1.-chi")
    assert e == U.Dot(U.Const(-1), U.Scale(-1, U.Leaf(U.special("chi"), "chi")))
    t = Series.t(6)
    assert U.expr_gf(e, 6) == (1 - t).recip()


def test_adjoint_of_unity_is_singleton():
    assert U.expr_gf(parse("adj(u)", 8), 8) == 1 + Series.t(8)


def test_dot_is_left_associative():
    e = parse("ubar.bell.chi")
    assert isinstance(e.left, U.Dot) and e.right.name == "chi"


def test_unknown_name_and_position():
    with pytest.raises(UnknownName):
        parse("u + gamma")
    with pytest.raises(DslSyntaxError) as err:
        parse("u + ")
    assert err.value.position == 4
    with pytest.raises(DslSyntaxError):
        parse("")
    with pytest.raises(DslSyntaxError):
        parse("adj u")
    with pytest.raises(DslSyntaxError):
        parse("(u + chi")
    with pytest.raises(DslSyntaxError):
        parse("u $ chi")


def test_each_name_is_fresh():
    e = parse("u + u")
    assert U.evaluate(e, 2) == 4  # uncorrelated copies: 1 + 2 + 1
    same = U.Leaf(U.special("u"))
    assert U.evaluate(same + same, 2) == 4  # correlated: (2u)^2 -> 4


def test_env_umbrae():
    a = U.from_moments([1, F(2), F(5)])
    assert U.evaluate(parse("a + x", env={"a": a}), 2) == U.evaluate(U.Leaf(a) + U.Var(), 2)


def test_spans():
    e = parse("u + chi")
    assert e.terms[1].span[0] == 4
