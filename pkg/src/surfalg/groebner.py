"""Buchberger's algorithm with Gebauer-Moller pair elimination.

The engine works on plain dicts mapping exponent tuples to python ints
(primitive integer polynomials), with fraction-free reduction and content
stripping, under a block order that compares the elimination block first.
That is all an elimination-order Groebner basis needs, and keeps the hot
loop free of Fraction overhead.
"""

from __future__ import annotations

import heapq
import time
from fractions import Fraction
from math import gcd

from .mpoly import MPoly


class BudgetExceededError(RuntimeError):
    pass


class BlockOrder:
    """Degree-grevlex on the first `nelim` variables, then degree-grevlex on the rest."""

    __slots__ = ("nelim", "_cache")

    def __init__(self, nelim):
        self.nelim = nelim
        self._cache = {}

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            ne = self.nelim
            head, tail = m[:ne], m[ne:]
            k = (sum(head), tuple(-e for e in reversed(head)),
                 sum(tail), tuple(-e for e in reversed(tail)))
            self._cache[m] = k
        return k


def _strip_content(terms):
    g = 0
    for c in terms.values():
        g = gcd(g, c if c >= 0 else -c)
        if g == 1:
            return terms
    if g > 1:
        for m in terms:
            terms[m] //= g
    return terms


class GPoly:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms, order):
        self.terms = terms
        self.lm = max(terms, key=order.key)
        self.lc = terms[self.lm]


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _mono_mul(terms, mono, coef):
    return {tuple(a + b for a, b in zip(m, mono)): c * coef for m, c in terms.items()}


_STRIP_EVERY = 12


def _find_reducer(m, basis):
    for g in basis:
        if _divides(g.lm, m):
            return g
    return None


def _reduce_step(terms, extra, m, red):
    """terms <- lc(red)*terms - terms[m]*x^shift*red, also scaling `extra`."""
    c = terms[m]
    glc = red.lc
    if glc != 1:
        for k in terms:
            terms[k] *= glc
        if extra is not None:
            for k in extra:
                extra[k] *= glc
    shift = tuple(a - b for a, b in zip(m, red.lm))
    for m2, c2 in red.terms.items():
        mm = tuple(a + b for a, b in zip(shift, m2))
        s = terms.get(mm, 0) - c * c2
        if s:
            terms[mm] = s
        else:
            terms.pop(mm, None)


def head_reduce(p, basis, order):
    """Fraction-free top-reduction until the leading term is irreducible."""
    terms = dict(p)
    if not terms:
        return terms
    _strip_content(terms)
    steps = 0
    while terms:
        m = max(terms, key=order.key)
        red = _find_reducer(m, basis)
        if red is None:
            return _strip_content(terms)
        _reduce_step(terms, None, m, red)
        steps += 1
        if steps % _STRIP_EVERY == 0:
            _strip_content(terms)
    return terms


def normal_form(p, basis, order):
    """Full reduction: every term of the result is irreducible."""
    terms = dict(p)
    if not terms:
        return terms
    _strip_content(terms)
    out = {}
    steps = 0
    while terms:
        m = max(terms, key=order.key)
        red = _find_reducer(m, basis)
        if red is None:
            out[m] = terms.pop(m)
            continue
        _reduce_step(terms, out, m, red)
        steps += 1
        if steps % _STRIP_EVERY == 0 and not out:
            _strip_content(terms)
    if out:
        g = 0
        for c in out.values():
            g = gcd(g, c if c >= 0 else -c)
            if g == 1:
                return out
        if g > 1:
            for m in out:
                out[m] //= g
    return out


def _gm_update(basis, pairs, alive, t, order):
    """Add pairs (i, t) for the new basis element, applying the Gebauer-Moller
    criteria, and prune old pairs by the chain criterion."""
    lm_t = basis[t].lm
    lcms = {i: _lcm(basis[i].lm, lm_t) for i in range(t)}
    keep = []
    for i in range(t):
        li = lcms[i]
        dominated = False
        for jj in range(t):
            if jj == i:
                continue
            lj = lcms[jj]
            if lj != li and _divides(lj, li):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    # one pair per distinct lcm; drop pairs with coprime leading monomials
    seen = {}
    for i in keep:
        seen.setdefault(lcms[i], i)
    for lcm_m, i in sorted(seen.items(), key=lambda kv: order.key(kv[0])):
        prod = tuple(a + b for a, b in zip(basis[i].lm, lm_t))
        if lcm_m == prod:
            continue  # Buchberger's coprime criterion
        alive[(i, t)] = True
        heapq.heappush(pairs, (order.key(lcm_m), i, t))
    # chain criterion on old pairs
    for (i, j) in [k for k, v in alive.items() if v and k[1] != t]:
        lij = _lcm(basis[i].lm, basis[j].lm)
        if (_divides(lm_t, lij) and lcms[i] != lij and lcms[j] != lij):
            alive[(i, j)] = False


def buchberger(generators, nelim, time_budget=None):
    """Reduced Groebner basis of integer term dicts under BlockOrder(nelim).

    Returns a list of term dicts, primitive with positive leading
    coefficient, sorted by leading monomial.
    """
    order = BlockOrder(nelim)
    deadline = time.monotonic() + time_budget if time_budget else None
    basis = []
    pairs = []
    alive = {}
    for g in generators:
        terms = {m: int(c) for m, c in g.items() if c}
        if not terms:
            continue
        terms = _strip_content(terms)
        r = head_reduce(terms, basis, order)
        if r:
            basis.append(GPoly(r, order))
            _gm_update(basis, pairs, alive, len(basis) - 1, order)
    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError("Groebner computation exceeded its time budget")
        _, i, j = heapq.heappop(pairs)
        if not alive.pop((i, j), False):
            continue
        gi, gj = basis[i], basis[j]
        lcm_m = _lcm(gi.lm, gj.lm)
        si = _mono_mul(gi.terms, tuple(a - b for a, b in zip(lcm_m, gi.lm)), gj.lc)
        sj = _mono_mul(gj.terms, tuple(a - b for a, b in zip(lcm_m, gj.lm)), gi.lc)
        s = dict(si)
        for m, c in sj.items():
            d = s.get(m, 0) - c
            if d:
                s[m] = d
            else:
                s.pop(m, None)
        r = head_reduce(s, basis, order)
        if r:
            basis.append(GPoly(r, order))
            _gm_update(basis, pairs, alive, len(basis) - 1, order)
    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    # minimal basis: drop elements whose lm is divisible by another's
    kept = []
    for g in sorted(basis, key=lambda g: order.key(g.lm)):
        if not any(_divides(h.lm, g.lm) for h in kept):
            kept.append(g)
    # inter-reduce tails to a fixpoint (leading terms cannot change here)
    for _ in range(len(kept) + 2):
        changed = False
        nxt = []
        for idx, g in enumerate(kept):
            others = [h for jdx, h in enumerate(kept) if jdx != idx]
            r = normal_form(dict(g.terms), others, order)
            r = _positive_lead(r, order) if r else r
            if r != g.terms:
                changed = True
            nxt.append(GPoly(r, order) if r else None)
        kept = [g for g in nxt if g is not None]
        if not changed:
            break
    kept.sort(key=lambda g: order.key(g.lm))
    return [g.terms for g in kept]


def _positive_lead(terms, order):
    lm = max(terms, key=order.key)
    if terms[lm] < 0:
        return {m: -c for m, c in terms.items()}
    return terms


# -- MPoly bridge -------------------------------------------------------------


def groebner_eliminate(polys, elim_vars, keep_vars, time_budget=None):
    """Elimination-ideal generators: the reduced-GB elements free of `elim_vars`.

    Returns a list of MPoly in `keep_vars`, sorted by (total degree, text).
    """
    ring = tuple(elim_vars) + tuple(keep_vars)
    nelim = len(elim_vars)
    gens = []
    for p in polys:
        p = p.extend(ring) if p.vars != ring else p
        prim = p.primitive()
        den_lcm = 1
        for c in prim.terms.values():
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        gens.append({m: int(c * den_lcm) for m, c in prim.terms.items()})
    gb = buchberger(gens, nelim, time_budget)
    found = []
    for terms in gb:
        lm = max(terms, key=BlockOrder(nelim).key)
        if any(lm[:nelim]):
            continue
        mp = MPoly(keep_vars,
                   {m[nelim:]: Fraction(c) for m, c in terms.items()})
        found.append(mp.canonical())
    found.sort(key=lambda q: (q.total_degree(), q.to_text()))
    return found
