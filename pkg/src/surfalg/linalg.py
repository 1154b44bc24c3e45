"""Exact and modular linear algebra for the elimination engines.

`rational_kernel` computes exact right-nullspace bases by fraction-free
(Bareiss) elimination.  The modular helpers (`nullspace_mod`, CRT, rational
reconstruction, prime generation) back the multi-modular interpolation
path; every modular result is reconstructed and verified exactly by the
callers, so the primes only ever affect speed, not correctness.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("matrix rows have unequal lengths")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def mul_vector(self, vec):
        return [sum((a * b for a, b in zip(row, vec)), Fraction(0))
                for row in self.entries]


def rational_kernel(M):
    """Exact basis of {v : M v = 0}, deterministic.

    Fraction-free forward elimination on an integer-scaled copy, then back
    substitution.  One basis vector per free column, in ascending column
    order; each vector has coprime integer entries with its first nonzero
    entry positive.
    """
    if isinstance(M, RationalMatrix):
        A = [row[:] for row in M.entries]
    else:
        A = [[Fraction(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols == 0:
        return []
    # clear denominators row by row (row scaling preserves the kernel)
    w = [[0] * cols for _ in range(rows)]
    for i, row in enumerate(A):
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        for j, x in enumerate(row):
            w[i][j] = int(x * lcm)
    # Bareiss elimination with first-nonzero pivoting
    pivots = []
    r = 0
    prev = 1
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if w[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            w[r], w[pr] = w[pr], w[r]
        piv = w[r][c]
        for i in range(r + 1, rows):
            if not any(w[i][c:]):
                continue
            f = w[i][c]
            for j in range(cols):
                w[i][j] = (piv * w[i][j] - f * w[r][j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == rows:
            break
    rank = len(pivots)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            pc = pivots[i]
            s = sum((Fraction(w[i][j]) * vec[j] for j in range(pc + 1, cols) if vec[j]),
                    Fraction(0))
            vec[pc] = -s / w[i][pc]
        basis.append(_normalize_vector(vec))
    return basis


def _normalize_vector(vec):
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(Fraction(x) for x in ints)


# -- modular path -------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def word_primes(count, below=2 ** 31):
    """The `count` largest primes below `below` (descending)."""
    out = []
    n = below - 1
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n -= 2 if n % 2 else 1
    return out


def nullspace_mod(M, p):
    """RREF-based right nullspace of an int64 matrix mod p.

    Returns (pivot_columns, basis) where basis has one int64 vector per free
    column with the free coordinate set to 1; this normal form makes the
    basis canonical, so results agree across primes entrywise.
    """
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        M -= np.outer(col, M[r])
        M %= p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        vec = np.zeros(cols, dtype=np.int64)
        vec[f] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-int(M[i, f])) % p
        basis.append(vec)
    return pivots, basis


def crt_pair(r1, m1, r2, m2):
    inv = pow(m1 % m2, m2 - 2, m2) if is_prime(m2) else pow(m1 % m2, -1, m2)
    delta = (r2 - r1) % m2
    return r1 + m1 * (delta * inv % m2), m1 * m2


def rational_reconstruct(r, m):
    """n/d with r*d = n (mod m) and |n|, d <= sqrt(m/2), or None."""
    r %= m
    bound = isqrt(m // 2)
    r0, r1 = m, r
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)
