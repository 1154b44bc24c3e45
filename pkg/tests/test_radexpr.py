"""Radical-graded expressions over a base polynomial."""

from fractions import Fraction

import pytest

from surfalg.mpoly import MPoly
from surfalg.radexpr import BaseMismatchError, GradeOverflowError, RadExpr
from surfalg.ratfun import RatFun

UV = ("u", "v")


def w_poly():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    return (u + 1) ** 2 + (v + 1) ** 2 + 1


def test_grades_add_under_multiplication():
    W = w_poly()
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    p = RadExpr(W, {-1: RatFun(u + 1)})
    q = RadExpr(W, {-1: RatFun(v + 1)})
    prod = (p * q).collapse()
    assert prod == RadExpr(W, {-2: RatFun((u + 1) * (v + 1))})


def test_division_cancels_radical_grades():
    # X / P with both at grade -1/2 is an ordinary rational function
    W = w_poly()
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    X = RadExpr(W, {-1: RatFun(u + 1)})
    P = RadExpr(W, {-1: RatFun((u + 1) * (v + 1), MPoly.const(2, UV))})
    q = (X / P).to_ratfun()
    assert q == RatFun(MPoly.const(2, UV), v + 1)


def test_additive_inverse():
    W = w_poly()
    e = RadExpr(W, {1: RatFun(MPoly.var("u", UV)), 0: RatFun(MPoly.const(3, UV))})
    assert (e + (-e)).is_zero()


def test_mixed_bases_rejected():
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    with pytest.raises(BaseMismatchError):
        RadExpr(w_poly(), {0: RatFun(u)}) + RadExpr((u * v + 1), {0: RatFun(v)})


def test_inexact_division_rejected():
    W = w_poly()
    u = MPoly.var("u", UV)
    mixed = RadExpr(W, {0: RatFun(u), 1: RatFun(u)})
    single = RadExpr(W, {0: RatFun(u)})
    with pytest.raises(Exception):
        single / mixed


def test_diff_chain_rule_sqrt():
    W = w_poly()
    e = RadExpr.sqrt_base(W)
    d = e.diff("u").collapse()
    # d/du W^(1/2) = (1/2) W_u W^(-1/2)
    expected = RadExpr(W, {-1: RatFun(W.diff("u").scaled(Fraction(1, 2)))})
    assert d == expected


def test_diff_quotient_with_radical():
    # d/du (G / sqrt(W)) = (u+1)(2W - G) W^(-3/2) for G = 1 + (1+u)^2
    W = w_poly()
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    G = MPoly.const(1, UV) + (u + 1) ** 2
    e = RadExpr(W, {-1: RatFun(G)})
    d = e.diff("u").collapse()
    expected = RadExpr(W, {-3: RatFun((u + 1) * (W.scaled(2) - G))})
    assert d == expected


def test_diff_of_rational_part():
    W = w_poly()
    v = MPoly.var("v", UV)
    e = RadExpr.rational(RatFun(v * v), W)
    assert e.diff("v") == RadExpr.rational(RatFun(v.scaled(2)), W)


def test_grade0_roundtrip():
    W = w_poly()
    u, v = MPoly.var("u", UV), MPoly.var("v", UV)
    r = RatFun((u + 2) * (v - 1), (v + 3))
    e = RadExpr.rational(r, W)
    assert e.to_ratfun() == r


def test_even_powers_fold_to_rational():
    W = w_poly()
    e = RadExpr(W, {2: RatFun(MPoly.const(1, UV)), 0: RatFun(MPoly.const(5, UV))})
    assert e.to_ratfun() == RatFun(W + 5)


def test_odd_part_blocks_to_ratfun():
    W = w_poly()
    e = RadExpr(W, {1: RatFun(MPoly.const(1, UV))})
    with pytest.raises(Exception):
        e.to_ratfun()
    assert e.odd_cofactor() == RatFun(MPoly.const(1, UV))


def test_grade_cap():
    W = w_poly()
    with pytest.raises(GradeOverflowError):
        RadExpr(W, {18: RatFun(MPoly.const(1, UV))})
    tall = RadExpr(W, {16: RatFun(MPoly.const(1, UV))})
    with pytest.raises(GradeOverflowError):
        (tall * tall).collapse()


def test_negative_power():
    W = w_poly()
    u = MPoly.var("u", UV)
    e = RadExpr(W, {-1: RatFun(u + 1)})
    inv = e ** -2
    assert (inv * e * e - 1).is_zero()


def test_constant_base():
    # base 3: sqrt(3) stays symbolic, even grades fold exactly
    three = MPoly.const(3, UV)
    e = RadExpr(three, {1: RatFun(MPoly.const(1, UV))})
    sq = (e * e).to_ratfun()
    assert sq == RatFun(MPoly.const(3, UV))


def test_exact_eval_even():
    W = w_poly()
    e = RadExpr(W, {-2: RatFun(MPoly.const(-1, UV))})  # -1/W
    assert e.eval_exact({"u": 0, "v": 0}) == Fraction(-1, 3)


def test_float_eval_norms():
    import math
    W = w_poly()
    e = RadExpr(W, {-1: RatFun(MPoly.const(1, UV))})  # 1/sqrt(W)
    val = e.eval_float({"u": 0.0, "v": 0.0})
    assert abs(val - 1 / math.sqrt(3)) < 1e-12


from hypothesis import given, settings, strategies as st


def rad_exprs():
    coef = st.integers(min_value=-4, max_value=4)
    expt = st.tuples(st.integers(0, 2), st.integers(0, 2))

    def build(parts):
        W = w_poly()
        out = {}
        for grade, entries in parts:
            p = MPoly(UV, {e: c for e, c in entries})
            if p.is_zero():
                continue
            out[grade] = RatFun(p)
        return RadExpr(W, out)

    part = st.tuples(st.integers(-4, 4),
                     st.lists(st.tuples(expt, coef), min_size=1, max_size=3))
    return st.lists(part, max_size=3).map(build)


class TestAlgebraLaws:
    @settings(max_examples=25, deadline=None)
    @given(rad_exprs(), rad_exprs(), rad_exprs())
    def test_distributive(self, a, b, c):
        assert ((a + b) * c - (a * c + b * c)).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(rad_exprs(), rad_exprs())
    def test_diff_leibniz(self, a, b):
        lhs = (a * b).diff("u")
        rhs = a.diff("u") * b + a * b.diff("u")
        assert (lhs - rhs).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(rad_exprs())
    def test_collapse_preserves_value(self, a):
        assert (a - a.collapse()).is_zero()
