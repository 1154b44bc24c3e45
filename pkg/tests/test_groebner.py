"""Buchberger engine: elimination, determinism, budget handling."""

import pytest

from surfalg.groebner import (BlockOrder, BudgetExceededError, buchberger,
                              groebner_eliminate)
from surfalg.mpoly import MPoly

UVXYZ = ("u", "v", "x", "y", "z")


def test_block_order_elimination_property():
    order = BlockOrder(2)
    # any monomial with parameter content beats any parameter-free one
    assert order.key((1, 0, 0, 0, 0)) > order.key((0, 0, 9, 9, 9))
    # within the image block, graded comparison
    assert order.key((0, 0, 2, 0, 0)) > order.key((0, 0, 1, 0, 0))


def test_eliminate_product_map():
    u = MPoly.var("u", UVXYZ)
    v = MPoly.var("v", UVXYZ)
    x = MPoly.var("x", UVXYZ)
    y = MPoly.var("y", UVXYZ)
    z = MPoly.var("z", UVXYZ)
    gens = [x - u, y - v, z - u * v]
    found = groebner_eliminate(gens, ("u", "v"), ("x", "y", "z"))
    assert found
    assert found[0].canonical_text() == "x*y - z"


def test_eliminate_circle():
    ring = ("t", "x", "y")
    t = MPoly.var("t", ring)
    x = MPoly.var("x", ring)
    y = MPoly.var("y", ring)
    one = MPoly.const(1, ring)
    # rational circle: x = (1-t^2)/(1+t^2), y = 2t/(1+t^2)
    gens = [x * (one + t * t) - (one - t * t), y * (one + t * t) - t.scaled(2)]
    found = groebner_eliminate(gens, ("t",), ("x", "y"))
    assert found[0].canonical_text() == "x^2 + y^2 - 1"


def test_deterministic():
    u = MPoly.var("u", UVXYZ)
    v = MPoly.var("v", UVXYZ)
    x = MPoly.var("x", UVXYZ)
    y = MPoly.var("y", UVXYZ)
    z = MPoly.var("z", UVXYZ)
    gens = [x - u * u, y - v * (u + 1), z - u * v]
    a = [q.canonical_text() for q in groebner_eliminate(gens, ("u", "v"), ("x", "y", "z"))]
    b = [q.canonical_text() for q in groebner_eliminate(gens, ("u", "v"), ("x", "y", "z"))]
    assert a == b and a


def test_budget_error():
    u = MPoly.var("u", UVXYZ)
    v = MPoly.var("v", UVXYZ)
    x = MPoly.var("x", UVXYZ)
    y = MPoly.var("y", UVXYZ)
    z = MPoly.var("z", UVXYZ)
    # graph ideal with non-coprime leading terms, so pairs survive to the loop
    gens = [x - (u * v * v * 2 + v * 3),
            y - (v ** 3 * -2 + v * v * 2 - v * 2),
            z - (u ** 3 * 3 + v)]
    with pytest.raises(BudgetExceededError):
        groebner_eliminate(gens, ("u", "v"), ("x", "y", "z"), time_budget=1e-9)


def test_buchberger_reduced_basis_is_primitive():
    ring = ("s", "x", "y")
    s = MPoly.var("s", ring)
    x = MPoly.var("x", ring)
    y = MPoly.var("y", ring)
    gens = [{e: int(c) for e, c in g.terms.items()}
            for g in (x - s * s * 2, y - s * s * s * 4)]
    gb = buchberger(gens, 1)
    from math import gcd
    for terms in gb:
        g = 0
        for c in terms.values():
            g = gcd(g, abs(c))
        assert g == 1
        lm = max(terms, key=BlockOrder(1).key)
        assert terms[lm] > 0
