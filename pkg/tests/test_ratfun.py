"""Rational functions: unreduced arithmetic, cross-multiplication equality."""

from fractions import Fraction

import pytest

from surfalg.mpoly import MPoly
from surfalg.ratfun import RatFun

UV = ("u", "v")


def up(text):
    return MPoly.parse(text, UV)


def test_equality_without_reduction():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    a = RatFun((u + 1) * (u + v), (u + 1) * v)
    b = RatFun(u + v, v)
    assert a == b
    assert hash(a.normalize()) == hash(b.normalize())


def test_arithmetic_cross_multiplies():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    a = RatFun(u, v)
    b = RatFun(v, u)
    s = a + b
    assert s == RatFun(u * u + v * v, u * v)
    assert (a * b) == RatFun(MPoly.const(1, UV))
    assert a / b == RatFun(u * u, v * v)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFun(up("u"), MPoly.zero(UV))
    with pytest.raises(ZeroDivisionError):
        RatFun(up("u"), up("v")) / RatFun(MPoly.zero(UV), up("v"))


def test_normalize_reduces_and_fixes_signs():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    r = RatFun((u * u - v * v).scaled(-2), (u + v).scaled(4)).normalize()
    assert r.num == (v - u).canonical() * 1 or r == RatFun((u - v).scaled(Fraction(-1, 2)))
    # denominator is integer with positive leading coefficient
    assert r.den.content().denominator == 1
    _, lc = r.den.leading()
    assert lc > 0


def test_normalize_keeps_value():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    r = RatFun((u + 1) ** 2 * (v + 2), (u + 1) * (v + 5))
    n = r.normalize()
    pt = {"u": Fraction(1, 3), "v": Fraction(2, 7)}
    assert r.eval(pt) == n.eval(pt)


def test_diff_quotient_rule():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    r = RatFun(u * u, v + 1)
    d = r.diff("u")
    assert d == RatFun(u.scaled(2), v + 1)


def test_to_poly():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    r = RatFun((u + 1) * (v + 1), (u + 1))
    assert r.to_poly() == v + 1
    half = RatFun(u, MPoly.const(2, UV))
    assert half.to_poly() == u.scaled(Fraction(1, 2))


def test_eval_denominator_zero():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    with pytest.raises(ZeroDivisionError):
        RatFun(u, v).eval({"u": 1, "v": 0})
