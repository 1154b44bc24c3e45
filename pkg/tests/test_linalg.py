"""Exact and modular kernels, CRT, rational reconstruction."""

from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from surfalg.linalg import (RationalMatrix, crt_pair, is_prime, nullspace_mod,
                            rational_kernel, rational_reconstruct, word_primes)


def test_identity_has_trivial_kernel():
    M = RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rational_kernel(M) == []


def test_single_row():
    basis = rational_kernel([[1, 1]])
    assert basis == [(Fraction(1), Fraction(-1))]


def test_monomial_evaluation_matrix_contains_z_minus_xy():
    # monomials of total degree <= 2 in (x, y, z) evaluated at image points of
    # (u, v) -> (u, v, u v); the kernel must contain the z - x y relation
    monos = [(i, j, k) for d in range(3)
             for i in range(d + 1) for j in range(d + 1 - i)
             for k in (d - i - j,)]
    pts = [(2, 3), (5, 7), (1, 4), (3, 8), (6, 5), (9, 2), (4, 9), (7, 3),
           (8, 6), (2, 7), (5, 1), (10, 3), (3, 10), (11, 5), (6, 11),
           (12, 7), (7, 12), (13, 2), (2, 13), (9, 8)]
    rows = []
    for u, v in pts:
        vals = {"x": u, "y": v, "z": u * v}
        rows.append([vals["x"] ** i * vals["y"] ** j * vals["z"] ** k
                     for (i, j, k) in monos])
    basis = rational_kernel(rows)
    target = {}
    target[monos.index((0, 0, 1))] = 1
    target[monos.index((1, 1, 0))] = -1
    found = False
    for vec in basis:
        nz = {i: c for i, c in enumerate(vec) if c}
        if nz == {k: Fraction(v) for k, v in target.items()} or \
           nz == {k: Fraction(-v) for k, v in target.items()}:
            found = True
    assert found, basis


def test_kernel_vectors_annihilate():
    M = RationalMatrix([[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]])
    basis = rational_kernel(M)
    assert len(basis) == 2
    for vec in basis:
        assert all(x == 0 for x in M.mul_vector(list(vec)))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                         min_size=4, max_size=4), min_size=2, max_size=5))
def test_kernel_property(rows):
    M = RationalMatrix(rows)
    basis = rational_kernel(M)
    for vec in basis:
        assert all(x == 0 for x in M.mul_vector(list(vec)))
    # rank-nullity
    assert len(basis) >= M.cols - M.rows


def test_word_primes():
    ps = word_primes(5)
    assert len(ps) == 5 and all(is_prime(p) for p in ps)
    assert all(p < 2 ** 31 for p in ps)
    assert ps == sorted(ps, reverse=True)


def test_nullspace_mod_matches_exact():
    p = 2147483647
    M = np.array([[1, 2, 3], [4, 5, 6]], dtype=np.int64)
    pivots, basis = nullspace_mod(M, p)
    assert pivots == [0, 1]
    assert len(basis) == 1
    v = basis[0]
    assert all(int(x) % p == 0 for x in (M @ v) % p)


def test_crt_and_reconstruction():
    p1, p2 = word_primes(2)
    value = Fraction(-110592, 7)
    r1 = value.numerator * pow(value.denominator, p1 - 2, p1) % p1
    r2 = value.numerator * pow(value.denominator, p2 - 2, p2) % p2
    comb, mod = crt_pair(r1, p1, r2, p2)
    assert rational_reconstruct(comb, mod) == value


def test_reconstruction_failure_returns_none():
    # 37 mod 101: the continued-fraction chain exits with |denominator| > bound
    assert rational_reconstruct(37, 101) is None


def test_reconstruction_roundtrip_within_bound():
    m = 10 ** 9 + 7  # bound is isqrt(m/2) ~ 22360
    for value in (Fraction(3, 7), Fraction(-13337, 11), Fraction(499)):
        r = value.numerator * pow(value.denominator, m - 2, m) % m
        assert rational_reconstruct(r, m) == value
