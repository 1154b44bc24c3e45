"""Implicitization of rational parametric surfaces.

Two independent routes produce the implicit equation of a map
(u, v) -> (x, y, z) of rational functions:

* a Groebner elimination over the saturated graph ideal, and
* degree-incremental interpolation: evaluate all monomials up to the trial
  degree at exact points of the map, take the nullspace of the evaluation
  matrix (multi-modular with CRT + rational reconstruction), and certify
  the reconstructed polynomial by an exact substitution proof.

Both return the same canonical polynomial wherever both succeed, which the
test suite leans on heavily.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .groebner import BudgetExceededError, groebner_eliminate
from .linalg import crt_pair, nullspace_mod, rational_reconstruct, word_primes
from .mpoly import MPoly, grlex_key, poly_lcm
from .ratfun import RatFun


class ImplicitNotFoundError(RuntimeError):
    pass


class SamplingDegenerateError(RuntimeError):
    pass


class ParametricMap3:
    """A triple of rational functions of (u, v), the input of implicitization."""

    __slots__ = ("components", "params", "out_vars", "_common_den")

    def __init__(self, x, y, z, params=("u", "v"), out_vars=("x", "y", "z")):
        self.params = tuple(params)
        self.out_vars = tuple(out_vars)
        comps = []
        for c in (x, y, z):
            if isinstance(c, MPoly):
                c = RatFun(c)
            elif not isinstance(c, RatFun):
                c = RatFun(MPoly.const(c, self.params))
            comps.append(c.normalize())
        self.components = tuple(comps)
        if all(c.num.is_constant() for c in self.components):
            raise ValueError("parametric map is constant")
        self._common_den = None

    @classmethod
    def from_patch(cls, patch, out_vars=("x", "y", "z")):
        x, y, z = patch.components
        return cls(x, y, z, params=patch.params, out_vars=out_vars)

    def common_denominator(self):
        """lcm of the three (reduced) denominators."""
        if self._common_den is None:
            d = MPoly.const(1, self.params)
            for c in self.components:
                d = poly_lcm(d, c.den)
            self._common_den = d
        return self._common_den

    def cleared_numerators(self):
        """(A, B, C, D) with the map equal to (A/D, B/D, C/D)."""
        from .mpoly import exact_div
        D = self.common_denominator()
        nums = tuple(c.num * exact_div(D, c.den) for c in self.components)
        return nums + (D,)

    def eval(self, point):
        return tuple(c.eval(point) for c in self.components)

    def __repr__(self):
        txt = ", ".join(c.to_text() for c in self.components)
        return f"ParametricMap3({txt})"


@dataclass
class EliminationConfig:
    method: str = "auto"           # groebner | interp | auto
    dmax: int = 20
    sample_factor: int = 2         # points >= factor * monomial count
    max_primes: int = 16
    time_budget: float = 1800.0    # seconds

    def __post_init__(self):
        if self.dmax < 1:
            raise ValueError("degree bound must be at least 1")
        if self.time_budget <= 0:
            raise ValueError("time budget must be positive")


@dataclass
class ImplicitSurface:
    poly: MPoly
    degree: int
    method: str
    notes: dict = field(default_factory=dict)

    def to_text(self):
        return self.poly.to_text()


def canonical_implicit(Q):
    """Integer content removed, sign normalized, canonical term order."""
    if Q.is_zero():
        raise ValueError("implicit equation must be nonzero")
    return Q.canonical()


def degree_of(surface):
    return surface.poly.total_degree()


# -- exact substitution proof --------------------------------------------------


def compose_numerator_zero(m: ParametricMap3, Q: MPoly):
    """Exact decision of Q(map) == 0 as a rational identity.

    For small degrees the cross-multiplied numerator is expanded; for large
    ones it is evaluated on an integer grid strictly exceeding its degree
    bounds, which decides the identity exactly (a nonzero polynomial of
    per-variable degree <= B cannot vanish on a (B+1)^2 grid).
    """
    A, B, C, D = m.cleared_numerators()
    d = Q.total_degree()
    u, v = m.params
    deg_u = d * max(p.degree_in(u) for p in (A, B, C, D))
    deg_v = d * max(p.degree_in(v) for p in (A, B, C, D))
    if (deg_u + 1) * (deg_v + 1) <= 1600 or d * max(p.total_degree() for p in (A, B, C, D)) <= 30:
        return _compose_expand(Q, A, B, C, D, d).is_zero()
    return _compose_grid_proof(Q, A, B, C, D, d, deg_u, deg_v, m.params)


def _compose_expand(Q, A, B, C, D, d):
    pows = {}
    for name, p in (("A", A), ("B", B), ("C", C), ("D", D)):
        row = [MPoly.const(1, p.vars)]
        for _ in range(d):
            row.append(row[-1] * p)
        pows[name] = row
    total = MPoly.zero(A.vars)
    for e, c in Q.terms.items():
        i, j, k = e
        t = pows["A"][i] * pows["B"][j]
        t = t * pows["C"][k]
        t = t * pows["D"][d - i - j - k]
        total = total + t.scaled(c)
    return total


def _compose_grid_proof(Q, A, B, C, D, d, deg_u, deg_v, params):
    u, v = params
    qterms = [(e, c) for e, c in Q.terms.items()]
    den_lcm = 1
    for _, c in qterms:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    qint = [(e, int(c * den_lcm)) for e, c in qterms]
    # scale all four by one integer so integer evaluation is exact; a common
    # factor multiplies the composed numerator by lambda^d only
    scale = 1
    for p in (A, B, C, D):
        for c in p.terms.values():
            scale = scale * c.denominator // gcd(scale, c.denominator)
    if scale != 1:
        A, B, C, D = (p.scaled(scale) for p in (A, B, C, D))
    for uu in range(2, 2 + deg_u + 1):
        for vv in range(3, 3 + deg_v + 1):
            pt = {u: Fraction(uu), v: Fraction(vv)}
            va, vb, vc, vd = (int(p.eval(pt)) for p in (A, B, C, D))
            pa, pb, pc, pd = [1], [1], [1], [1]
            for _ in range(d):
                pa.append(pa[-1] * va)
                pb.append(pb[-1] * vb)
                pc.append(pc[-1] * vc)
                pd.append(pd[-1] * vd)
            total = 0
            for (i, j, k), c in qint:
                total += c * pa[i] * pb[j] * pc[k] * pd[d - i - j - k]
            if total != 0:
                return False
    return True


# -- Groebner route ------------------------------------------------------------


def implicitize_groebner(m: ParametricMap3, cfg: EliminationConfig = None) -> ImplicitSurface:
    """Eliminate the parameters from the saturated graph ideal.

    Ideal: <x dx - nx, y dy - ny, z dz - nz, 1 - t D> with D the product of
    the distinct non-constant denominators and t a fresh saturation
    variable; the elimination-order Groebner basis is filtered for its
    lowest-degree element free of the parameters.
    """
    cfg = cfg or EliminationConfig()
    t0 = time.monotonic()
    params = m.params
    out = m.out_vars
    dens = []
    for c in m.components:
        dn = c.den.canonical()
        if not dn.is_constant() and all(dn != d for d in dens):
            dens.append(dn)
    sat = bool(dens)
    elim_vars = params + (("_t",) if sat else ())
    ring = elim_vars + out
    gens = []
    for name, c in zip(out, m.components):
        xv = MPoly.var(name, ring)
        gens.append(xv * c.den.extend(ring) - c.num.extend(ring))
    if sat:
        D = MPoly.const(1, ring)
        for dn in dens:
            D = D * dn.extend(ring)
        gens.append(MPoly.const(1, ring) - MPoly.var("_t", ring) * D)
    eliminants = groebner_eliminate(gens, elim_vars, out, time_budget=cfg.time_budget)
    if not eliminants:
        raise ImplicitNotFoundError("elimination ideal contains no polynomial "
                                    "in the image variables")
    Q = canonical_implicit(eliminants[0])
    if not compose_numerator_zero(m, Q):
        raise ImplicitNotFoundError("Groebner eliminant fails the substitution check")
    return ImplicitSurface(poly=Q, degree=Q.total_degree(), method="groebner",
                           notes={"basis_eliminants": len(eliminants),
                                  "saturated": sat,
                                  "seconds": round(time.monotonic() - t0, 3)})


# -- interpolation route -------------------------------------------------------


def monomials_up_to(d):
    """Exponent triples of total degree <= d in canonical (descending) order."""
    out = []
    for e in sorted(((i, j, k)
                     for i in range(d + 1)
                     for j in range(d + 1 - i)
                     for k in range(d + 1 - i - j)),
                    key=grlex_key, reverse=True):
        out.append(e)
    return out


def _sample_points(m: ParametricMap3, count):
    """Deterministic exact sample points avoiding denominator zeros.

    A decorrelated integer lattice walk; correlated (curve-like) samples
    would make every low-degree matrix singular.
    """
    u, v = m.params
    dens = [c.den for c in m.components]
    pts = []
    side = isqrt(count) + 2
    i = 0
    while len(pts) < count and i < 40 * count + 400:
        ii, jj = divmod(i, side)
        i += 1
        uu = Fraction(2 + 3 * ii + (jj % 2))
        vv = Fraction(3 + 2 * jj + (ii % 3))
        pt = {u: uu, v: vv}
        if any(dn.eval(pt) == 0 for dn in dens):
            continue
        pts.append(pt)
    if len(pts) < count:
        raise SamplingDegenerateError("could not find enough sample points "
                                      "off the denominator zero set")
    return pts


def _kernel_multimodular(values, d, monos, primes, deadline):
    """Nullspace of the monomial evaluation matrix, reconstructed over Q.

    values: list of (a, b, c) Fractions per sample point.  Returns a list of
    candidate coefficient vectors (lists of Fraction), or None if the kernel
    is trivial mod the first prime.  A reconstruction is accepted only when
    two consecutive prime counts produce the same rationals; the caller still
    certifies the result by an exact substitution proof.
    """
    npts = len(values)
    residue_vecs = None
    modulus = None
    pivot_sig = None
    previous = None
    for p in primes:
        if time.monotonic() > deadline:
            raise BudgetExceededError("interpolation exceeded its time budget")
        try:
            va = np.array([f.numerator * pow(f.denominator, p - 2, p) % p
                           for f, _, _ in values], dtype=np.int64)
            vb = np.array([f.numerator * pow(f.denominator, p - 2, p) % p
                           for _, f, _ in values], dtype=np.int64)
            vc = np.array([f.numerator * pow(f.denominator, p - 2, p) % p
                           for _, _, f in values], dtype=np.int64)
        except ZeroDivisionError:
            continue  # prime divides a sample denominator; skip it
        pa = [np.ones(npts, dtype=np.int64)]
        pb = [np.ones(npts, dtype=np.int64)]
        pc = [np.ones(npts, dtype=np.int64)]
        for _ in range(d):
            pa.append(pa[-1] * va % p)
            pb.append(pb[-1] * vb % p)
            pc.append(pc[-1] * vc % p)
        M = np.empty((npts, len(monos)), dtype=np.int64)
        for col, (i, j, k) in enumerate(monos):
            M[:, col] = pa[i] * pb[j] % p * pc[k] % p
        pivots, basis = nullspace_mod(M, p)
        if not basis:
            return None  # trivial mod p proves trivial over Q
        sig = tuple(pivots)
        if pivot_sig is None or sig != pivot_sig or len(basis) != len(residue_vecs):
            # first prime, or an unlucky prime changed the RREF normal form:
            # restart the accumulation anchored on the newest kernel
            pivot_sig = sig
            residue_vecs = [[int(x) for x in b] for b in basis]
            modulus = p
            previous = None
            continue
        for vec, extra in zip(residue_vecs, basis):
            for idx in range(len(vec)):
                vec[idx], _ = crt_pair(vec[idx], modulus, int(extra[idx]), p)
        modulus *= p
        out = []
        for vec in residue_vecs:
            rec = [rational_reconstruct(x, modulus) for x in vec]
            if any(r is None for r in rec):
                out = None
                break
            out.append(rec)
        if out is not None and previous is not None and out == previous:
            return out
        previous = out
    raise SamplingDegenerateError("rational reconstruction did not stabilize; "
                                  "add primes or samples")


def implicitize_interpolation(m: ParametricMap3, cfg: EliminationConfig = None) -> ImplicitSurface:
    """Lowest-degree annihilator by monomial interpolation.

    The degree loop is exact evidence in both directions: a trivial kernel
    modulo one prime proves no annihilator of that degree exists (rank can
    only drop modulo p), and the reconstructed candidate is certified by an
    exact substitution proof before anything is returned.
    """
    cfg = cfg or EliminationConfig()
    t0 = time.monotonic()
    deadline = t0 + cfg.time_budget
    primes = word_primes(cfg.max_primes)
    resampled = 0
    d = 1
    while d <= cfg.dmax:
        if time.monotonic() > deadline:
            raise BudgetExceededError("interpolation exceeded its time budget")
        monos = monomials_up_to(d)
        count = cfg.sample_factor * len(monos) + 7 + 37 * resampled
        pts = _sample_points(m, count)
        values = [m.eval(pt) for pt in pts]
        candidates = _kernel_multimodular(values, d, monos, primes, deadline)
        if candidates is None:
            d += 1
            continue
        polys = []
        for vec in candidates:
            terms = {e: c for e, c in zip(monos, vec) if c}
            polys.append(canonical_implicit(MPoly(m.out_vars, terms)))
        polys.sort(key=lambda q: (q.total_degree(), q.to_text()))
        Q = polys[0]
        if compose_numerator_zero(m, Q):
            return ImplicitSurface(
                poly=Q, degree=Q.total_degree(), method="interpolation",
                notes={"samples": len(pts), "kernel_dim": len(candidates),
                       "minimality": f"kernel trivial mod p for degrees < {d}",
                       "seconds": round(time.monotonic() - t0, 3)})
        resampled += 1
        if resampled > 2:
            raise SamplingDegenerateError(
                "kernel vector failed the exact substitution proof repeatedly")
    raise ImplicitNotFoundError(f"no annihilator of degree <= {cfg.dmax} found")


def implicitize(m: ParametricMap3, cfg: EliminationConfig = None) -> ImplicitSurface:
    cfg = cfg or EliminationConfig()
    if cfg.method == "groebner":
        return implicitize_groebner(m, cfg)
    if cfg.method == "interp":
        return implicitize_interpolation(m, cfg)
    # auto: the Groebner route wins on small polynomial maps, interpolation
    # scales to the tangential maps
    total = sum(c.num.total_degree() + c.den.total_degree() for c in m.components)
    if total <= 12 and all(c.den.is_constant() for c in m.components):
        try:
            return implicitize_groebner(m, cfg)
        except BudgetExceededError:
            pass
    return implicitize_interpolation(m, cfg)


@dataclass
class ClassResult:
    class_degree: int
    surface: ImplicitSurface
    tangential_map: ParametricMap3


def class_of(patch, cfg: EliminationConfig = None) -> ClassResult:
    """Class of a patch: degree of an implicit equation of its tangential map.

    The tangential coordinates come from the patch's own tangent-plane data
    (first principles); the published coordinates for the built-in surfaces
    are adjudicated elsewhere, never substituted here.
    """
    from .surface import tangent_plane
    cfg = cfg or EliminationConfig()
    tp = tangent_plane(patch)
    u, v = patch.params
    rename = {u: "u", v: "v"}
    tmap = ParametricMap3(tp.a.rename(rename), tp.b.rename(rename), tp.c.rename(rename),
                          params=("u", "v"), out_vars=("a", "b", "c"))
    surface = implicitize(tmap, cfg)
    return ClassResult(class_degree=surface.degree, surface=surface,
                       tangential_map=tmap)
