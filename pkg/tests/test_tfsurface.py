"""TF-type specs, curvature conditions, and the closed-form families."""

import math
from fractions import Fraction

import pytest

from surfalg.mpoly import MPoly
from surfalg.ratfun import RatFun
from surfalg.surface import second_fundamental_form
from surfalg.tfsurface import (AnalyticTFPatch, FamilyConstraintError, GridSpec,
                               ScalarFunction, TFSpec,
                               constantK_constraint_residual, cos_scalar,
                               gauss_condition_residual, gauss_numerator,
                               make_family, make_tf_patch, minimality_numerator,
                               minimality_residual, w_polynomial)

UV = ("u", "v")


def lin(var):
    return ScalarFunction.from_coeffs([0, 1], var)


def const(c, var):
    return ScalarFunction.from_coeffs([c], var)


class TestMakePatch:
    def test_reference_surface(self):
        spec = TFSpec(1, 1, lin("u"), lin("v"))
        p = make_tf_patch(spec)
        assert p.components[2] == RatFun(MPoly.parse("u*v + u + v", UV))

    def test_translation_mode(self):
        spec = TFSpec(1, 0, ScalarFunction.from_coeffs([0, 0, 1], "u"), lin("v"))
        p = make_tf_patch(spec)
        assert spec.mode == "translation"
        assert p.components[2] == RatFun(MPoly.parse("u^2 + v", UV))

    def test_factorable_mode(self):
        spec = TFSpec(0, 1, ScalarFunction.from_coeffs([0, 0, 1], "u"), lin("v"))
        p = make_tf_patch(spec)
        assert spec.mode == "factorable"
        assert p.components[2] == RatFun(MPoly.parse("u^2*v", UV))

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            TFSpec(0, 0, lin("u"), lin("v"))

    def test_translation_has_zero_mixed_second_form(self):
        # m = B f' g' / sqrt(W) vanishes identically when B = 0
        spec = TFSpec(2, 0, ScalarFunction.from_coeffs([0, 1, 3], "u"),
                      ScalarFunction.from_coeffs([0, 2, 0, 1], "v"))
        _, m, _ = second_fundamental_form(make_tf_patch(spec))
        assert m.is_zero()


class TestMinimalityResidual:
    def test_reference_surface_not_minimal(self):
        spec = TFSpec(1, 1, lin("u"), lin("v"))
        res = minimality_residual(spec)
        expected = MPoly.parse("-2*u*v - 2*u - 2*v - 2", UV)  # -2(1+u)(1+v)
        assert res == expected

    def test_plane_minimal(self):
        spec = TFSpec(1, 1, const(0, "u"), const(0, "v"))
        assert minimality_residual(spec).is_zero()

    def test_tan_family_numeric(self):
        fam = make_family("minimal_tan_gv", {"A": 1, "B": 1, "C1": 1, "C2": 0})
        rep = minimality_residual(fam.spec)
        assert rep.passes(1e-9), rep
        assert rep.skipped >= 0

    def test_printed_variant_differs(self):
        spec = TFSpec(1, 2, ScalarFunction.from_coeffs([0, 1, 1], "u"),
                      ScalarFunction.from_coeffs([0, 2, 0, 1], "v"))
        assert minimality_numerator(spec, "computed") != minimality_numerator(spec, "printed")

    def test_computed_equals_surface_h(self):
        # the symbolic residual is literally 2 H W^(3/2) of the patch
        spec = TFSpec(1, 2, ScalarFunction.from_coeffs([1, 1, 1], "u"),
                      ScalarFunction.from_coeffs([0, 2, 1], "v"))
        res = minimality_residual(spec)
        assert res == minimality_numerator(spec, "computed")


class TestGaussCondition:
    def test_flat_solution(self):
        # C = 0 with f linear, g constant solves both sides
        spec = TFSpec(1, 2, ScalarFunction.from_coeffs([Fraction(3), Fraction(2)], "u"),
                      const(Fraction(5), "v"))
        r1, r2 = gauss_condition_residual(spec, 0)
        assert r1.is_zero() and r2.is_zero()

    def test_nonconstant_case(self):
        spec = TFSpec(1, 1, lin("u"), lin("v"))
        r1, r2 = gauss_condition_residual(spec, Fraction(2))
        assert not r1.is_zero()  # f''=0 forces -C f'^2 != 0

    def test_gauss_numerator_matches_curvature(self):
        from surfalg.surface import gaussian_curvature
        from surfalg.radexpr import RadExpr
        spec = TFSpec(1, 2, ScalarFunction.from_coeffs([0, 1, 1], "u"),
                      ScalarFunction.from_coeffs([1, 3], "v"))
        p = make_tf_patch(spec)
        K = gaussian_curvature(p)
        W = w_polynomial(spec)
        w2 = RadExpr(p.base, {0: RatFun(W * W)})
        assert (K * w2).to_ratfun().to_poly() == gauss_numerator(spec)


class TestFamilies:
    def test_tan_family_realization(self):
        fam = make_family("minimal_tan_gv", {"A": 1, "B": 1, "C1": 1, "C2": 0})
        f = fam.spec.f
        assert abs(f.value(0.3) - (math.tan(0.3) - 1)) < 1e-12
        assert fam.spec.g.is_polynomial

    def test_mirrored_tan_family(self):
        fam = make_family("minimal_tan_fu", {"A": 1, "B": 2, "C1": 1, "C2": 0})
        assert fam.spec.f.is_polynomial
        rep = minimality_residual(fam.spec)
        assert rep.passes(1e-9), rep

    def test_flat_family(self):
        fam = make_family("flatK_f", {"A": 1, "B": 1, "C1": Fraction(7, 2)})
        assert fam.spec.f.is_polynomial
        assert fam.spec.f.poly == MPoly(("u",), {(0,): Fraction(7, 2)})

    def test_constantK_requires_B_ne_C(self):
        with pytest.raises(FamilyConstraintError):
            make_family("constantK_f", {"A": 1, "B": 2, "C": 2, "C1": 1, "C2": 0})

    def test_tan_family_needs_nonzero_constants(self):
        with pytest.raises(FamilyConstraintError):
            make_family("minimal_tan_gv", {"A": 1, "B": 0, "C1": 1, "C2": 0})

    def test_corrected_power_family_solves_the_ode(self):
        fam = make_family("constantK_f", {"A": 1, "B": 2, "C": 1, "C1": 1, "C2": 3},
                          variant="corrected")
        r1, _ = gauss_condition_residual(fam.spec, 1,
                                         grid=GridSpec(rect=((0.0, 1.0), (0.0, 1.0))))
        assert r1.max_abs < 1e-6

    def test_printed_power_family_misses(self):
        fam = make_family("constantK_f", {"A": 1, "B": 2, "C": 1, "C1": 1, "C2": 3},
                          variant="printed")
        r1, _ = gauss_condition_residual(fam.spec, 1,
                                         grid=GridSpec(rect=((0.0, 1.0), (0.0, 1.0))))
        assert r1.max_abs > 1e-3

    def test_printed_g_family_solves_its_ode_when_real(self):
        fam = make_family("constantK_g", {"A": 1, "B": 2, "C": 1, "C1": 1, "C2": 3},
                          variant="printed")
        _, r2 = gauss_condition_residual(fam.spec, 1,
                                         grid=GridSpec(rect=((0.0, 1.0), (0.0, 1.0))))
        assert r2.max_abs < 1e-6

    def test_unknown_family(self):
        with pytest.raises(FamilyConstraintError):
            make_family("nope", {})


class TestConstantKConstraint:
    def test_zero_c_constant_f(self):
        spec = TFSpec(1, 1, const(2, "u"), lin("v"))
        rep = constantK_constraint_residual(spec, 0, which="f")
        assert rep.max_abs == 0.0

    def test_positive_c_never_vanishes(self):
        spec = TFSpec(1, 1, lin("u"), lin("v"))
        rep = constantK_constraint_residual(spec, Fraction(1, 2), which="f")
        assert rep.max_abs > 0.0
        # the residual is a sum of a nonnegative and a positive term
        assert rep.evaluated > 0


class TestAnalyticPatch:
    def test_pole_skipping(self):
        fam = make_family("minimal_tan_gv", {"A": 0, "B": 1, "C1": 1, "C2": 0})
        patch = AnalyticTFPatch(fam.spec)
        # tan pole at u = pi/2 ~ 1.5708
        assert patch.distance_to_singularity(math.pi / 2, 0.0) < 1e-9

    def test_point_data_consistency(self):
        spec = TFSpec(1, 1, lin("u"), lin("v"))
        sym = make_tf_patch(spec)
        ana = AnalyticTFPatch(spec)
        d = ana.point_data(0.25, -0.5)
        from surfalg.surface import mean_curvature, gaussian_curvature
        H = mean_curvature(sym).eval_float({"u": Fraction(1, 4), "v": Fraction(-1, 2)})
        K = gaussian_curvature(sym).eval_float({"u": Fraction(1, 4), "v": Fraction(-1, 2)})
        assert abs(d["H"] - H) < 1e-12
        assert abs(d["K"] - K) < 1e-12

    def test_cos_spec_grid(self):
        spec = TFSpec(1, 1, ScalarFunction.from_coeffs([0, 1], "u"), cos_scalar())
        rep = minimality_residual(spec)
        assert rep.evaluated > 0  # informative: generally not minimal
