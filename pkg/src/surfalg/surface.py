"""Differential geometry of parametric patches.

Patches carry rational components in two parameters; every radical-bearing
quantity (unit normal, second fundamental form, curvatures, plane offset)
is a RadExpr over one shared base polynomial W with W = <N, N> up to the
square of the component denominator, so square roots always cancel exactly
where they should (tangential coordinates, both Laplace-Beltrami images of
rational patches).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .mpoly import MPoly, PolynomialError, squarefree_split
from .ratfun import RatFun
from .radexpr import RadExpr


class DegeneratePatchError(ValueError):
    pass


class FlatSurfaceError(ValueError):
    pass


class ConeThroughOriginError(ValueError):
    pass


class UnsupportedPatchError(TypeError):
    pass


DEFAULT_DOMAIN = ((Fraction(-1), Fraction(1)), (Fraction(-1), Fraction(1)))


def _coerce_ratfun(c, params):
    if isinstance(c, RatFun):
        return c
    if isinstance(c, MPoly):
        return RatFun(c)
    return RatFun(MPoly.const(c, params))


class SurfacePatch:
    """A rational parametric patch (x(u,v), y(u,v), z(u,v)).

    The normal geometry (derivatives, first form, the base polynomial W and
    the exact square root of <N,N>) is computed lazily on first use, so
    operator outputs stay cheap to build.
    """

    __slots__ = ("params", "components", "domain", "_geom", "_forms")

    def __init__(self, x, y, z, params=("u", "v"), domain=DEFAULT_DOMAIN):
        self.params = tuple(params)
        if len(self.params) != 2:
            raise PolynomialError("a surface patch needs exactly two parameters")
        self.components = tuple(_coerce_ratfun(c, self.params).normalize()
                                for c in (x, y, z))
        self.domain = domain
        self._geom = None
        self._forms = None

    def _geometry(self):
        if self._geom is not None:
            return self._geom
        u, v = self.params
        comps = self.components
        # keep every intermediate reduced; unreduced chains swell fast here
        du = tuple(c.diff(u).normalize() for c in comps)
        dv = tuple(c.diff(v).normalize() for c in comps)
        E = (du[0] * du[0] + du[1] * du[1] + du[2] * du[2]).normalize()
        F = (du[0] * dv[0] + du[1] * dv[1] + du[2] * dv[2]).normalize()
        G = (dv[0] * dv[0] + dv[1] * dv[1] + dv[2] * dv[2]).normalize()
        # Lagrange identity: <N,N> = E G - F^2
        nn = (E * G - F * F).normalize()
        if nn.is_zero():
            base, sqrt_nn = MPoly.const(1, self.params), None
        else:
            # <N,N> = (sn^2 fn)/(sd^2 fd); pulling the square parts out of the
            # radical keeps the base polynomial W = fn*fd as small as possible:
            # sqrt<N,N> = sn * sqrt(W) / (sd * fd)
            sn, fn = squarefree_split(nn.num)
            sd, fd = squarefree_split(nn.den)
            base = fn * fd
            sqrt_nn = RadExpr(base, {1: RatFun(sn, sd * fd)})
        self._geom = {"du": du, "dv": dv, "first": (E, F, G),
                      "base": base, "sqrt_nn": sqrt_nn}
        return self._geom

    @property
    def base(self):
        return self._geometry()["base"]

    @property
    def _sqrt_nn(self):
        return self._geometry()["sqrt_nn"]

    @property
    def _du(self):
        return self._geometry()["du"]

    @property
    def _dv(self):
        return self._geometry()["dv"]

    @property
    def _first_form(self):
        return self._geometry()["first"]

    @property
    def is_degenerate(self):
        return self._geometry()["sqrt_nn"] is None

    def component_exprs(self):
        """The components as grade-0 radical expressions over the shared base."""
        return tuple(RadExpr.rational(c, self.base) for c in self.components)

    def eval_float(self, point):
        pt = {k: v if isinstance(v, (int, Fraction)) else Fraction(v)
              for k, v in point.items()}
        return tuple(float(c.eval(pt)) for c in self.components)

    def scale(self, factor):
        x, y, z = self.components
        f = Fraction(factor)
        return SurfacePatch(x * f, y * f, z * f, self.params, self.domain)

    def assert_regular(self, samples=5):
        """Sample <N,N> over the annotated domain; raise if it never comes out nonzero."""
        if self.is_degenerate:
            raise DegeneratePatchError("patch normal field vanishes identically")
        (u0, u1), (v0, v1) = self.domain
        u, v = self.params
        hits = 0
        for i in range(1, samples + 1):
            for j in range(1, samples + 1):
                pt = {u: u0 + (u1 - u0) * Fraction(i, samples + 1),
                      v: v0 + (v1 - v0) * Fraction(j, samples + 1)}
                try:
                    val = self.base.eval(pt)
                except ZeroDivisionError:
                    continue
                if val != 0:
                    hits += 1
        if hits == 0:
            raise DegeneratePatchError("patch is singular on the whole sampled domain")

    def __repr__(self):
        txt = ", ".join(c.to_text() for c in self.components)
        return f"SurfacePatch(({txt}); params={self.params})"


def _cross_ratfun(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


@dataclass
class FundamentalForms:
    E: RatFun
    F: RatFun
    G: RatFun
    l: RadExpr
    m: RadExpr
    n: RadExpr
    detI: RatFun
    detII: RadExpr
    W: MPoly
    sqrt_detI: RadExpr
    N: tuple
    U: tuple


@dataclass
class ThirdFormCombos:
    Xc: RadExpr
    Yc: RadExpr
    Zc: RadExpr


@dataclass
class TangentPlaneData:
    Xn: RadExpr
    Yn: RadExpr
    Zn: RadExpr
    P: RadExpr
    a: RatFun
    b: RatFun
    c: RatFun


def _require_symbolic(p):
    if not isinstance(p, SurfacePatch):
        raise UnsupportedPatchError(
            "symbolic surface operations need a rational SurfacePatch; "
            "analytic patches only support the numeric evaluation path")
    if p.is_degenerate:
        raise DegeneratePatchError("patch normal field vanishes identically")


def fundamental_forms(p: SurfacePatch) -> FundamentalForms:
    _require_symbolic(p)
    if p._forms is not None:
        return p._forms
    u, v = p.params
    du, dv = p._du, p._dv
    E, F, G = p._first_form
    detI = (E * G - F * F).normalize()
    N = tuple(c.normalize() for c in _cross_ratfun(du, dv))
    sigma = p._sqrt_nn
    inv_sigma = RadExpr.rational(1, p.base) / sigma
    U = tuple((RadExpr.rational(c, p.base) * inv_sigma).normalize() for c in N)
    duu = [c.diff(u).normalize() for c in du]
    duv = [c.diff(v).normalize() for c in du]
    dvv = [c.diff(v).normalize() for c in dv]
    def dot_u(second):
        acc = RadExpr.zero(p.base)
        for c, Uc in zip(second, U):
            acc = acc + RadExpr.rational(c, p.base) * Uc
        return acc.normalize()
    l, m, n = dot_u(duu), dot_u(duv), dot_u(dvv)
    detII = (l * n - m * m).normalize()
    forms = FundamentalForms(E=E, F=F, G=G, l=l, m=m, n=n, detI=detI,
                             detII=detII, W=p.base, sqrt_detI=sigma,
                             N=tuple(N), U=U)
    p._forms = forms
    return forms


def first_fundamental_form(p: SurfacePatch):
    f = fundamental_forms(p)
    return f.E, f.F, f.G


def second_fundamental_form(p: SurfacePatch):
    f = fundamental_forms(p)
    return f.l, f.m, f.n


def normal_field(p: SurfacePatch):
    """(N, W, U): raw normal, its squared length as the base polynomial, unit normal."""
    f = fundamental_forms(p)
    return f.N, f.W, f.U


def gaussian_curvature(p: SurfacePatch) -> RadExpr:
    f = fundamental_forms(p)
    return (f.detII / RadExpr.rational(f.detI, p.base)).normalize()


def mean_curvature(p: SurfacePatch) -> RadExpr:
    f = fundamental_forms(p)
    num = (RadExpr.rational(f.E, p.base) * f.n
           + RadExpr.rational(f.G, p.base) * f.l
           - RadExpr.rational(2 * f.F, p.base) * f.m)
    return (num / RadExpr.rational(2 * f.detI, p.base)).normalize()


def third_form_combos(p: SurfacePatch) -> ThirdFormCombos:
    f = fundamental_forms(p)
    E = RadExpr.rational(f.E, p.base)
    F = RadExpr.rational(f.F, p.base)
    G = RadExpr.rational(f.G, p.base)
    l, m, n = f.l, f.m, f.n
    Xc = (E * m * m - 2 * F * l * m + G * l * l).normalize()
    Yc = (E * m * n - F * l * n + G * l * m - F * m * m).normalize()
    Zc = (G * m * m - 2 * F * n * m + E * n * n).normalize()
    return ThirdFormCombos(Xc=Xc, Yc=Yc, Zc=Zc)


def laplace_beltrami_one(p: SurfacePatch) -> SurfacePatch:
    """Divergence-form second-order image of the position vector built from
    the first fundamental form, applied componentwise."""
    f = fundamental_forms(p)
    u, v = p.params
    inv_sigma = RadExpr.rational(1, p.base) / f.sqrt_detI
    out = []
    for phi in p.components:
        pu, pv = phi.diff(u), phi.diff(v)
        t1 = RadExpr.rational(f.G * pu - f.F * pv, p.base) * inv_sigma
        t2 = RadExpr.rational(f.E * pv - f.F * pu, p.base) * inv_sigma
        val = (-(t1.diff(u) + t2.diff(v)) * inv_sigma).normalize()
        out.append(val.to_ratfun())
    return SurfacePatch(*out, params=p.params, domain=p.domain)


def laplace_beltrami_three(p: SurfacePatch) -> SurfacePatch:
    """The analogous operator built from the third fundamental form via the
    X, Y, Z combinations; needs det II != 0."""
    f = fundamental_forms(p)
    if f.detII.is_zero():
        raise FlatSurfaceError("third-form operator is undefined on flat patches")
    u, v = p.params
    combos = third_form_combos(p)
    inv_inner = RadExpr.rational(1, p.base) / (f.sqrt_detI * f.detII)
    prefactor = -(f.sqrt_detI / f.detII)
    out = []
    for phi in p.components:
        pu = RadExpr.rational(phi.diff(u), p.base)
        pv = RadExpr.rational(phi.diff(v), p.base)
        t1 = ((combos.Zc * pu - combos.Yc * pv) * inv_inner).normalize()
        t2 = ((combos.Yc * pu - combos.Xc * pv) * inv_inner).normalize()
        val = (prefactor * (t1.diff(u) - t2.diff(v))).normalize()
        out.append(val.to_ratfun())
    return SurfacePatch(*out, params=p.params, domain=p.domain)


def tangent_plane(p: SurfacePatch) -> TangentPlaneData:
    """Unit-normal components, plane offset, and the tangential coordinates
    (normal over offset) with the radical grades cancelled."""
    f = fundamental_forms(p)
    Xn, Yn, Zn = f.U
    P = RadExpr.zero(p.base)
    for Uc, comp in zip(f.U, p.components):
        P = P + Uc * RadExpr.rational(comp, p.base)
    P = (-P).normalize()
    if P.is_zero():
        raise ConeThroughOriginError(
            "tangent planes pass through the origin; tangential coordinates undefined")
    a = (Xn / P).to_ratfun()
    b = (Yn / P).to_ratfun()
    c = (Zn / P).to_ratfun()
    return TangentPlaneData(Xn=Xn, Yn=Yn, Zn=Zn, P=P, a=a, b=b, c=c)
