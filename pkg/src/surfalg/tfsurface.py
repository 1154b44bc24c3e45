"""TF-type surfaces (u, v, A(f(u)+g(v)) + B f(u) g(v)).

Polynomial data goes through the exact symbolic pipeline; analytic data
(tan, cos, real powers) runs on a numeric path with supplied derivative
evaluators and pole-aware grids.  The curvature-condition residuals exist
in both a "computed" variant (derived from the general mean-curvature
formula, which carries beta in the last product term) and a "printed"
variant matching the published display that drops that beta; the two are
kept side by side so the discrepancy stays measurable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .mpoly import MPoly
from .radexpr import RadExpr
from .ratfun import RatFun
from .surface import SurfacePatch, mean_curvature

PARAMS = ("u", "v")


class FamilyConstraintError(ValueError):
    pass


class ScalarFunction:
    """A single-variable function: exact polynomial or analytic with evaluators."""

    __slots__ = ("kind", "poly", "name", "value", "d1", "d2", "sing_dist")

    def __init__(self, kind, poly=None, name=None, value=None, d1=None, d2=None,
                 sing_dist=None):
        self.kind = kind
        if kind == "polynomial":
            if poly is None:
                raise ValueError("polynomial scalar function needs an MPoly")
            self.poly = poly
            self.name = name or poly.to_text()
            self.value = None
            self.d1 = None
            self.d2 = None
            self.sing_dist = None
        elif kind == "analytic":
            if value is None or d1 is None or d2 is None:
                raise ValueError("analytic scalar function needs value/d1/d2 evaluators")
            self.poly = None
            self.name = name or "analytic"
            self.value = value
            self.d1 = d1
            self.d2 = d2
            self.sing_dist = sing_dist or (lambda x: math.inf)
        else:
            raise ValueError(f"unknown scalar function kind {kind!r}")

    @classmethod
    def from_poly(cls, poly, name=None):
        return cls("polynomial", poly=poly, name=name)

    @classmethod
    def from_coeffs(cls, coeffs, var, name=None):
        p = MPoly((var,), {(i,): Fraction(c) for i, c in enumerate(coeffs)})
        return cls.from_poly(p, name=name)

    @property
    def is_polynomial(self):
        return self.kind == "polynomial"

    def eval_triple(self, x):
        """(value, first, second derivative) at a float point."""
        if self.is_polynomial:
            var = self.poly.vars[0]
            p1 = self.poly.diff(var)
            p2 = p1.diff(var)
            pt = {var: Fraction(x).limit_denominator(10 ** 12)}
            return (float(self.poly.eval(pt)), float(p1.eval(pt)), float(p2.eval(pt)))
        return (self.value(x), self.d1(x), self.d2(x))

    def distance_to_singularity(self, x):
        if self.is_polynomial:
            return math.inf
        return self.sing_dist(x)

    def __repr__(self):
        return f"ScalarFunction({self.name})"


def tan_scalar(A, B, C1, C2):
    """f(x) = (tan(B(C1 x + C2)) - A)/B with exact derivative evaluators."""
    A, B, C1, C2 = map(float, (A, B, C1, C2))
    if B == 0 or C1 == 0:
        raise FamilyConstraintError("tan family needs B != 0 and C1 != 0")

    def theta(x):
        return B * (C1 * x + C2)

    def value(x):
        return (math.tan(theta(x)) - A) / B

    def d1(x):
        s = 1.0 / math.cos(theta(x))
        return C1 * s * s

    def d2(x):
        t = theta(x)
        s = 1.0 / math.cos(t)
        return 2.0 * B * C1 * C1 * s * s * math.tan(t)

    def sing_dist(x):
        t = theta(x)
        k = round((t - math.pi / 2) / math.pi)
        pole = math.pi / 2 + k * math.pi
        return abs(t - pole) / abs(B * C1)

    label = f"(tan({B:g}*({C1:g}x+{C2:g}))-{A:g})/{B:g}"
    return ScalarFunction("analytic", name=label, value=value, d1=d1, d2=d2,
                          sing_dist=sing_dist)


def cos_scalar(scale=1, shift=0):
    scale, shift = float(scale), float(shift)

    def value(x):
        return math.cos(scale * x + shift)

    def d1(x):
        return -scale * math.sin(scale * x + shift)

    def d2(x):
        return -scale * scale * math.cos(scale * x + shift)

    return ScalarFunction("analytic", name=f"cos({scale:g}x+{shift:g})",
                          value=value, d1=d1, d2=d2)


def power_scalar(K, C1, C2, exponent, offset, scale=1.0, name=None):
    """f(x) = scale * [K(C1 x + C2)]^exponent + offset, real for positive bases."""
    K, C1, C2, exponent, offset, scale = map(float, (K, C1, C2, exponent, offset, scale))

    def base(x):
        return K * (C1 * x + C2)

    def value(x):
        return scale * math.pow(base(x), exponent) + offset

    def d1(x):
        return scale * exponent * K * C1 * math.pow(base(x), exponent - 1)

    def d2(x):
        return scale * exponent * (exponent - 1) * (K * C1) ** 2 * math.pow(base(x), exponent - 2)

    def sing_dist(x):
        # real powers need a positive base
        b = base(x)
        slope = abs(K * C1)
        return (b / slope) if b > 0 else 0.0

    return ScalarFunction("analytic", name=name or f"[{K:g}({C1:g}x+{C2:g})]^{exponent:g}+{offset:g}",
                          value=value, d1=d1, d2=d2, sing_dist=sing_dist)


@dataclass
class TFSpec:
    """Data defining a TF-type patch (u, v, A(f+g) + B f g)."""
    A: Fraction
    B: Fraction
    f: ScalarFunction
    g: ScalarFunction

    def __post_init__(self):
        self.A = Fraction(self.A)
        self.B = Fraction(self.B)
        if self.A == 0 and self.B == 0:
            raise ValueError("a TF-type spec needs A or B nonzero")

    @property
    def is_symbolic(self):
        return self.f.is_polynomial and self.g.is_polynomial

    @property
    def mode(self):
        if self.B == 0:
            return "translation"
        if self.A == 0:
            return "factorable"
        return "tf"


def _poly_in_params(sf, var):
    p = sf.poly
    if p.vars != (var,):
        p = p.rename({p.vars[0]: var})
    return p.extend(PARAMS)


def make_tf_patch(spec: TFSpec, domain=None):
    """The patch (u, v, A(f+g)+Bfg); symbolic for polynomial f, g, else numeric."""
    if spec.is_symbolic:
        u = MPoly.var("u", PARAMS)
        v = MPoly.var("v", PARAMS)
        fp = _poly_in_params(spec.f, "u")
        gp = _poly_in_params(spec.g, "v")
        z = fp.scaled(spec.A) + gp.scaled(spec.A) + (fp * gp).scaled(spec.B)
        kwargs = {"domain": domain} if domain else {}
        return SurfacePatch(RatFun(u), RatFun(v), RatFun(z), params=PARAMS, **kwargs)
    return AnalyticTFPatch(spec)


class AnalyticTFPatch:
    """Numeric evaluation path for TF specs with analytic f or g."""

    __slots__ = ("spec",)

    def __init__(self, spec):
        self.spec = spec

    def point_data(self, u, v):
        """Geometry data at one parameter point, or None near a singularity."""
        s = self.spec
        f, df, d2f = s.f.eval_triple(u)
        g, dg, d2g = s.g.eval_triple(v)
        A, B = float(s.A), float(s.B)
        alpha = A + B * g
        beta = A + B * f
        W = alpha * alpha * df * df + beta * beta * dg * dg + 1.0
        num_corr = (alpha * (1 + beta * beta * dg * dg) * d2f
                    + beta * (1 + alpha * alpha * df * df) * d2g
                    - 2 * B * alpha * beta * df * df * dg * dg)
        num_printed = (alpha * (1 + beta * beta * dg * dg) * d2f
                       + beta * (1 + alpha * alpha * df * df) * d2g
                       - 2 * B * alpha * df * df * dg * dg)
        K = (alpha * beta * d2f * d2g - B * B * df * df * dg * dg) / (W * W)
        H = num_corr / (2.0 * W ** 1.5)
        return {
            "z": A * (f + g) + B * f * g,
            "f": f, "df": df, "d2f": d2f, "g": g, "dg": dg, "d2g": d2g,
            "alpha": alpha, "beta": beta, "W": W,
            "H": H, "K": K,
            "mean_numerator": num_corr,
            "mean_numerator_printed": num_printed,
        }

    def eval_float(self, point):
        u = float(point.get("u", 0.0))
        v = float(point.get("v", 0.0))
        return (u, v, self.point_data(u, v)["z"])

    def distance_to_singularity(self, u, v):
        return min(self.spec.f.distance_to_singularity(u),
                   self.spec.g.distance_to_singularity(v))


@dataclass
class GridSpec:
    rect: tuple = ((-1.0, 1.0), (-1.0, 1.0))
    n: int = 21
    skip_radius: float = 1e-3


@dataclass
class GridReport:
    quantity: str
    max_abs: float
    argmax: Optional[tuple]
    evaluated: int
    skipped: int

    def passes(self, tol):
        return self.evaluated > 0 and self.max_abs < tol


def _grid_points(grid: GridSpec):
    (u0, u1), (v0, v1) = grid.rect
    for i in range(grid.n):
        for j in range(grid.n):
            yield (u0 + (u1 - u0) * i / (grid.n - 1),
                   v0 + (v1 - v0) * j / (grid.n - 1))


def _grid_scan(patch: AnalyticTFPatch, key, grid: GridSpec, quantity):
    max_abs, argmax, evaluated, skipped = 0.0, None, 0, 0
    for u, v in _grid_points(grid):
        if patch.distance_to_singularity(u, v) < grid.skip_radius:
            skipped += 1
            continue
        try:
            data = patch.point_data(u, v)
        except (ValueError, OverflowError, ZeroDivisionError):
            skipped += 1
            continue
        val = abs(key(data))
        if not math.isfinite(val):
            skipped += 1
            continue
        evaluated += 1
        if val > max_abs:
            max_abs, argmax = val, (u, v)
    return GridReport(quantity=quantity, max_abs=max_abs, argmax=argmax,
                      evaluated=evaluated, skipped=skipped)


# -- symbolic condition polynomials -------------------------------------------


def _spec_polys(spec: TFSpec):
    fp = _poly_in_params(spec.f, "u")
    gp = _poly_in_params(spec.g, "v")
    df, d2f = fp.diff("u"), fp.diff("u").diff("u")
    dg, d2g = gp.diff("v"), gp.diff("v").diff("v")
    alpha = MPoly.const(spec.A, PARAMS) + gp.scaled(spec.B)
    beta = MPoly.const(spec.A, PARAMS) + fp.scaled(spec.B)
    return fp, gp, df, d2f, dg, d2g, alpha, beta


def minimality_numerator(spec: TFSpec, variant="computed"):
    """The zero-mean-curvature condition polynomial for polynomial specs.

    variant "computed": carries beta in the last term (as the general mean
    curvature formula demands).  variant "printed": the published display,
    which drops that beta.
    """
    if not spec.is_symbolic:
        raise TypeError("symbolic residual needs polynomial f and g")
    fp, gp, df, d2f, dg, d2g, alpha, beta = _spec_polys(spec)
    one = MPoly.const(1, PARAMS)
    term12 = alpha * (one + beta * beta * dg * dg) * d2f \
        + beta * (one + alpha * alpha * df * df) * d2g
    cross = alpha * df * df * dg * dg
    if variant == "computed":
        cross = cross * beta
    elif variant != "printed":
        raise ValueError(f"unknown variant {variant!r}")
    return term12 - cross.scaled(2 * spec.B)


def gauss_numerator(spec: TFSpec):
    """Numerator of the Gaussian curvature over W^2 for polynomial specs."""
    if not spec.is_symbolic:
        raise TypeError("symbolic residual needs polynomial f and g")
    fp, gp, df, d2f, dg, d2g, alpha, beta = _spec_polys(spec)
    return alpha * beta * d2f * d2g - (df * df * dg * dg).scaled(spec.B * spec.B)


def w_polynomial(spec: TFSpec):
    if not spec.is_symbolic:
        raise TypeError("symbolic W needs polynomial f and g")
    fp, gp, df, d2f, dg, d2g, alpha, beta = _spec_polys(spec)
    return alpha * alpha * df * df + beta * beta * dg * dg + MPoly.const(1, PARAMS)


def minimality_residual(spec: TFSpec, variant="computed", grid: GridSpec = None):
    """Symbolic: numerator polynomial of 2 H W^(3/2) (from the surface's own
    mean curvature for "computed").  Analytic: grid report of |H| or of the
    printed-variant numerator over 2 W^(3/2)."""
    if spec.is_symbolic:
        if variant == "computed":
            patch = make_tf_patch(spec)
            H = mean_curvature(patch)
            # W^{3/2} = W * sqrt<N,N> with W the exact norm polynomial; the
            # patch base may be a squarefree proper divisor of W
            W = w_polynomial(spec)
            w32 = RadExpr.rational(RatFun(W), patch.base) * patch._sqrt_nn
            return (2 * (H * w32)).to_ratfun().to_poly()
        return minimality_numerator(spec, variant="printed")
    patch = AnalyticTFPatch(spec)
    grid = grid or GridSpec()
    if variant == "computed":
        return _grid_scan(patch, lambda d: d["H"], grid, "abs mean curvature")
    return _grid_scan(patch, lambda d: d["mean_numerator_printed"] / (2 * d["W"] ** 1.5),
                      grid, "printed-form mean residual")


def gauss_condition_residual(spec: TFSpec, C, grid: GridSpec = None):
    """Residuals of (A+Bf) f'' - C f'^2 and B^2 g'^2 - C (A+Bg) g''."""
    C = Fraction(C)
    if spec.is_symbolic:
        fp, gp, df, d2f, dg, d2g, alpha, beta = _spec_polys(spec)
        r1 = beta * d2f - (df * df).scaled(C)
        r2 = (dg * dg).scaled(spec.B * spec.B) - (alpha * d2g).scaled(C)
        return r1, r2
    patch = AnalyticTFPatch(spec)
    grid = grid or GridSpec()
    Cf = float(C)
    r1 = _grid_scan(patch, lambda d: d["beta"] * d["d2f"] - Cf * d["df"] ** 2,
                    grid, "f-side constant-curvature residual")
    r2 = _grid_scan(patch, lambda d: float(spec.B) ** 2 * d["dg"] ** 2 - Cf * d["alpha"] * d["d2g"],
                    grid, "g-side constant-curvature residual")
    return r1, r2


def constantK_constraint_residual(spec: TFSpec, C, which="f", grid: GridSpec = None):
    """Grid report of B^2 f'^2 + C W^2 (resp. g), under the linear-coordinate
    convention W = (A+Bv)^2 f'^2 + (A+Bf)^2 + 1."""
    patch = AnalyticTFPatch(spec) if not spec.is_symbolic else None
    grid = grid or GridSpec()
    A, B, Cf = float(spec.A), float(spec.B), float(C)

    def residual(u, v):
        if spec.is_symbolic:
            fv, dfv, _ = spec.f.eval_triple(u)
            gv, dgv, _ = spec.g.eval_triple(v)
        else:
            d = patch.point_data(u, v)
            fv, dfv, gv, dgv = d["f"], d["df"], d["g"], d["dg"]
        if which == "f":
            W = (A + B * v) ** 2 * dfv ** 2 + (A + B * fv) ** 2 + 1
            return B * B * dfv * dfv + Cf * W * W
        W = (A + B * u) ** 2 * dgv ** 2 + (A + B * gv) ** 2 + 1
        return B * B * dgv * dgv + Cf * W * W

    max_abs, argmax, evaluated, skipped = 0.0, None, 0, 0
    sing = (lambda u, v: min(spec.f.distance_to_singularity(u),
                             spec.g.distance_to_singularity(v)))
    for u, v in _grid_points(grid):
        if sing(u, v) < grid.skip_radius:
            skipped += 1
            continue
        try:
            val = abs(residual(u, v))
        except (ValueError, OverflowError, ZeroDivisionError):
            skipped += 1
            continue
        if not math.isfinite(val):
            skipped += 1
            continue
        evaluated += 1
        if val > max_abs:
            max_abs, argmax = val, (u, v)
    return GridReport(quantity=f"constant-curvature constraint ({which})",
                      max_abs=max_abs, argmax=argmax, evaluated=evaluated,
                      skipped=skipped)


# -- solution families ---------------------------------------------------------


FAMILY_IDS = ("minimal_tan_gv", "minimal_tan_fu", "constantK_f", "constantK_g", "flatK_f")


def _real_pow(base, expo):
    base, expo = Fraction(base), Fraction(expo)
    if base < 0 and expo.denominator != 1:
        raise FamilyConstraintError(
            f"({base})^({expo}) is not real; adjust the family constants")
    if base < 0:
        return float(base) ** int(expo)
    return math.pow(float(base), float(expo))


@dataclass
class SolutionFamily:
    family_id: str
    constants: dict
    spec: TFSpec
    notes: str = ""


def make_family(family_id, constants, variant="printed"):
    """Realize one of the closed-form families as a TFSpec.

    The constant-curvature power families exist in the published form
    ("printed") and in a derived form with the missing 1/B restored
    ("corrected"); the choice is explicit, never silent.
    """
    c = {k: Fraction(v) for k, v in constants.items()}
    A, B = c.get("A", Fraction(1)), c.get("B", Fraction(1))
    C1, C2 = c.get("C1", Fraction(1)), c.get("C2", Fraction(0))
    C = c.get("C", Fraction(0))
    lin_u = ScalarFunction.from_coeffs([0, 1], "u", name="u")
    lin_v = ScalarFunction.from_coeffs([0, 1], "v", name="v")
    if family_id == "minimal_tan_gv":
        if B == 0 or C1 == 0:
            raise FamilyConstraintError("minimal tan family needs B != 0 and C1 != 0")
        spec = TFSpec(A, B, tan_scalar(A, B, C1, C2), lin_v)
        return SolutionFamily(family_id, c, spec)
    if family_id == "minimal_tan_fu":
        if B == 0 or C1 == 0:
            raise FamilyConstraintError("minimal tan family needs B != 0 and C1 != 0")
        spec = TFSpec(A, B, lin_u, tan_scalar(A, B, C1, C2))
        return SolutionFamily(family_id, c, spec)
    if family_id == "flatK_f":
        f = ScalarFunction.from_coeffs([C1], "u", name=f"{C1}")
        return SolutionFamily(family_id, c, TFSpec(A, B, f, lin_v))
    if family_id == "constantK_f":
        if B == C:
            raise FamilyConstraintError("constant-curvature family needs B != C")
        if B == 0 or C1 == 0 or C == 0:
            raise FamilyConstraintError("constant-curvature family needs B, C, C1 != 0")
        e = Fraction(B, B - C)
        if variant == "printed":
            f = power_scalar(B - C, C1, C2, e, -A)
            notes = "published form; offset -A lacks the 1/B of the derivation"
        elif variant == "corrected":
            f = power_scalar(B - C, C1, C2, e, -A / B, scale=Fraction(1, 1) / B)
            notes = "derived form ([(B-C)(C1 u+C2)]^(B/(B-C)) - A)/B"
        else:
            raise ValueError(f"unknown variant {variant!r}")
        return SolutionFamily(family_id, c, TFSpec(A, B, f, lin_v), notes=notes)
    if family_id == "constantK_g":
        if B == C:
            raise FamilyConstraintError("constant-curvature family needs B != C")
        if B == 0 or C == 0 or C1 == 0:
            raise FamilyConstraintError("constant-curvature family needs B, C, C1 != 0")
        e = Fraction(B, B - C)
        if variant == "printed":
            if e.denominator != 1:
                raise FamilyConstraintError(
                    "published g-family needs an integer B/(B-C) for (-1)^(B/(B-C))")
            sign = (-1) ** int(e)
            expo = Fraction(-C, B - C)
            # composite constant: sign (B-C)^(-e) (B^(-C/(B-C)) C^((2B-C)/(B-C))
            #                      - B^((B-2C)/(B-C)) C^(B/(B-C))) / (B C)
            k0 = (_real_pow(B, Fraction(-C, B - C)) * _real_pow(C, Fraction(2 * B - C, B - C))
                  - _real_pow(B, Fraction(B - 2 * C, B - C)) * _real_pow(C, e))
            scale = sign * _real_pow(B - C, -e) * k0 / float(B * C)
            g = power_scalar(1, C1, C2, expo, -float(A) / float(B), scale=scale,
                             name="published constant-curvature g")
            return SolutionFamily(family_id, c, TFSpec(A, B, lin_u, g),
                                  notes="published form with its composite constant")
        if variant == "corrected":
            expo = Fraction(-C, B - C)
            g = power_scalar(1, C1, C2, expo, -A / B, scale=Fraction(1) / B,
                             name="derived constant-curvature g")
            return SolutionFamily(family_id, c, TFSpec(A, B, lin_u, g),
                                  notes="derived form ((C1 v+C2)^(-C/(B-C)) - A)/B")
        raise ValueError(f"unknown variant {variant!r}")
    raise FamilyConstraintError(f"unknown family {family_id!r}")
