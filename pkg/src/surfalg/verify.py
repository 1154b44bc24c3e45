"""Independent oracles and adjudication reports.

Every check either proves an identity exactly (difference reduces to the
zero polynomial) or measures a numeric residual on a grid.  The policy for
previously reported results is strict: nothing printed is ever corrected in
place; first-principles computation runs side by side and the comparison is
reported, with a concrete witness whenever two objects disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import reference
from .implicit import ParametricMap3, compose_numerator_zero
from .mpoly import MPoly
from .radexpr import RadExpr
from .ratfun import RatFun
from .surface import (SurfacePatch, fundamental_forms, gaussian_curvature,
                      laplace_beltrami_one, laplace_beltrami_three,
                      mean_curvature, tangent_plane)
from .tfsurface import GridSpec, make_family, minimality_residual

EXACT_PASS = "exact-pass"
NUMERIC_PASS = "numeric-pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class VerificationReport:
    name: str
    status: str
    kind: str = "assertion"      # assertion | informative
    witness: object = None
    tolerance: float = None
    notes: str = ""
    data: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.status in (EXACT_PASS, NUMERIC_PASS)

    def oneline(self):
        mark = "PASS" if self.ok else ("SKIP" if self.status == SKIPPED else "FAIL")
        tag = "" if self.kind == "assertion" else " [informative]"
        tail = f" -- {self.notes}" if self.notes else ""
        return f"[{mark}]{tag} {self.name}: {self.status}{tail}"


def substitution_check(m: ParametricMap3, Q: MPoly, name="substitution check",
                       kind="assertion") -> VerificationReport:
    """Exact-pass iff the numerator of Q composed with the map is zero."""
    if compose_numerator_zero(m, Q):
        return VerificationReport(name=name, status=EXACT_PASS, kind=kind)
    witness = None
    u, v = m.params
    for uu in range(2, 40):
        for vv in range(3, 41):
            pt = {u: Fraction(uu), v: Fraction(vv)}
            try:
                a, b, c = m.eval(pt)
            except ZeroDivisionError:
                continue
            val = Q.eval(dict(zip(Q.vars, (a, b, c))))
            if val != 0:
                witness = {"point": (uu, vv), "value": str(val)}
                break
        if witness:
            break
    return VerificationReport(name=name, status=FAIL, kind=kind, witness=witness,
                              notes="composition does not vanish")


def lb_identity_check(p: SurfacePatch, name="first-operator identity",
                      kind="assertion") -> VerificationReport:
    """Exact-pass iff LB1(position) x N == 0 and <LB1(position), U> == -2H.

    The -2H sign is the library's frozen convention, fixed once on the
    plane/paraboloid cases.
    """
    forms = fundamental_forms(p)
    img = laplace_beltrami_one(p)
    d = img.components
    N = forms.N
    cross = (d[1] * N[2] - d[2] * N[1],
             d[2] * N[0] - d[0] * N[2],
             d[0] * N[1] - d[1] * N[0])
    if any(not c.is_zero() for c in cross):
        return VerificationReport(name=name, status=FAIL, kind=kind,
                                  notes="image is not normal-parallel",
                                  witness={"cross": [c.to_text() for c in cross]})
    H = mean_curvature(p)
    inner = RadExpr.zero(p.base)
    for c, Uc in zip(d, forms.U):
        inner = inner + RadExpr.rational(c, p.base) * Uc
    if not (inner + 2 * H).is_zero():
        return VerificationReport(name=name, status=FAIL, kind=kind,
                                  notes="<image, U> does not equal -2H")
    return VerificationReport(name=name, status=EXACT_PASS, kind=kind)


def _parallel_factor(computed, printed):
    """RatFun ratio if the two component triples are pointwise parallel."""
    cross = (computed[1] * printed[2] - computed[2] * printed[1],
             computed[2] * printed[0] - computed[0] * printed[2],
             computed[0] * printed[1] - computed[1] * printed[0])
    if any(not c.is_zero() for c in cross):
        return None
    for c, q in zip(computed, printed):
        if not q.is_zero():
            return (c / q).normalize()
    return None


def printed_result_comparison(computed: SurfacePatch, printed: SurfacePatch,
                              name="comparison against reported parametrization",
                              kind="informative") -> VerificationReport:
    """Componentwise exact comparison; on mismatch reports the proportionality
    factor when the patches are pointwise parallel, otherwise a concrete
    non-parallel witness point."""
    diffs = [(c - q).normalize() for c, q in zip(computed.components, printed.components)]
    if all(d.is_zero() for d in diffs):
        return VerificationReport(name=name, status=EXACT_PASS, kind=kind)
    factor = _parallel_factor(computed.components, printed.components)
    if factor is not None:
        return VerificationReport(
            name=name, status=FAIL, kind=kind,
            notes=f"pointwise parallel with factor {factor.to_text()}",
            data={"factor": factor.to_text()})
    # find a witness where the cross product is nonzero
    u, v = computed.params
    witness = None
    for uu in range(0, 30):
        for vv in range(0, 30):
            pt = {u: Fraction(uu), v: Fraction(vv)}
            try:
                cv = [c.eval(pt) for c in computed.components]
                pv = [q.eval(pt) for q in printed.components]
            except ZeroDivisionError:
                continue
            cross = (cv[1] * pv[2] - cv[2] * pv[1],
                     cv[2] * pv[0] - cv[0] * pv[2],
                     cv[0] * pv[1] - cv[1] * pv[0])
            if any(x != 0 for x in cross):
                witness = {"point": (uu, vv),
                           "computed": [str(x) for x in cv],
                           "printed": [str(x) for x in pv],
                           "cross": [str(x) for x in cross]}
                break
        if witness:
            break
    return VerificationReport(name=name, status=FAIL, kind=kind, witness=witness,
                              notes="not parallel; witness point recorded")


def numeric_grid_residual(fn, rect=((-1.0, 1.0), (-1.0, 1.0)), n=21, tol=1e-9,
                          skip=None, name="numeric residual",
                          kind="assertion") -> VerificationReport:
    """Numeric-pass iff max |fn(u, v)| < tol over the non-skipped grid."""
    (u0, u1), (v0, v1) = rect
    max_abs, argmax, evaluated, skipped = 0.0, None, 0, 0
    for i in range(n):
        for jdx in range(n):
            uu = u0 + (u1 - u0) * i / (n - 1)
            vv = v0 + (v1 - v0) * jdx / (n - 1)
            if skip is not None and skip(uu, vv):
                skipped += 1
                continue
            try:
                val = abs(fn(uu, vv))
            except (ValueError, OverflowError, ZeroDivisionError):
                skipped += 1
                continue
            if not math.isfinite(val):
                skipped += 1
                continue
            evaluated += 1
            if val > max_abs:
                max_abs, argmax = val, (uu, vv)
    if evaluated == 0:
        return VerificationReport(name=name, status=SKIPPED, kind=kind,
                                  tolerance=tol, notes="all grid points skipped",
                                  data={"skipped": skipped})
    status = NUMERIC_PASS if max_abs < tol else FAIL
    return VerificationReport(name=name, status=status, kind=kind, tolerance=tol,
                              witness={"max_abs": max_abs, "argmax": argmax},
                              data={"evaluated": evaluated, "skipped": skipped,
                                    "max_abs": max_abs})


def finite_difference_check(sf, h=1e-4, rect=(-1.0, 1.0), n=17, scale=100.0,
                            name="finite-difference check",
                            kind="assertion") -> VerificationReport:
    """Supplied derivative evaluators vs central differences, relative
    tolerance max(1e-6, scale*h^2)."""
    tol = max(1e-6, scale * h * h)
    x0, x1 = rect
    worst = 0.0
    argmax = None
    evaluated = 0
    for i in range(n):
        x = x0 + (x1 - x0) * i / (n - 1)
        if sf.distance_to_singularity(x) < 10 * h:
            continue
        try:
            f0, d1, d2 = sf.eval_triple(x)
            fp, _, _ = sf.eval_triple(x + h)
            fm, _, _ = sf.eval_triple(x - h)
        except (ValueError, OverflowError, ZeroDivisionError):
            continue
        cd1 = (fp - fm) / (2 * h)
        cd2 = (fp - 2 * f0 + fm) / (h * h)
        r1 = abs(cd1 - d1) / max(1.0, abs(d1))
        r2 = abs(cd2 - d2) / max(1.0, abs(d2))
        evaluated += 1
        if max(r1, r2) > worst:
            worst, argmax = max(r1, r2), x
    if evaluated == 0:
        return VerificationReport(name=name, status=SKIPPED, kind=kind, tolerance=tol)
    status = NUMERIC_PASS if worst < tol else FAIL
    return VerificationReport(name=name, status=status, kind=kind, tolerance=tol,
                              witness={"max_rel": worst, "argmax": argmax})


# -- the built-in adjudication battery ----------------------------------------


def _ratfun_equal(a, b):
    return (a - b).is_zero()


def full_suite(deep=False):
    """Adjudicate the reported results for the built-in surfaces.

    Assertions are facts the toolkit relies on; informative reports record
    how the reported displays relate to first-principles computation.  With
    deep=True the (slower) tangential eliminations run too.
    """
    reports = []
    u = MPoly.var("u", reference.PARAMS)
    v = MPoly.var("v", reference.PARAMS)
    j = reference.j_poly()

    m1 = reference.delta1_printed_map()
    m3 = reference.delta3_printed_map()
    Q1 = reference.q_delta1()
    Q3 = reference.q_delta3()
    reports.append(substitution_check(
        m1, Q1, name="reported first-image map satisfies the degree-6 equation"))
    reports.append(substitution_check(
        m3, Q3, name="reported third-image map satisfies the degree-4 equation"))

    # the degree-4 equation in closed form
    x, y, z = (MPoly.var(n, reference.XYZ) for n in reference.XYZ)
    closed = ((x ** 2 + y ** 2 + z ** 2) ** 2 - 2 * x * y * z).canonical()
    status = EXACT_PASS if closed == Q3.canonical() else FAIL
    reports.append(VerificationReport(
        name="degree-4 equation equals (x^2+y^2+z^2)^2 - 2xyz", status=status))

    S = reference.tf_patch()
    reports.append(lb_identity_check(S, name="first-operator identity on the reference TF patch"))

    K = gaussian_curvature(S)
    K_expected = RadExpr(S.base, {-4: RatFun(MPoly.const(-1, reference.PARAMS))})
    reports.append(VerificationReport(
        name="K of the reference TF patch equals -1/W^2",
        status=EXACT_PASS if (K - K_expected).is_zero() else FAIL))
    H = mean_curvature(S)
    H_expected = RadExpr(S.base, {-3: RatFun(-(u + 1) * (v + 1))})
    reports.append(VerificationReport(
        name="H of the reference TF patch equals -(u+1)(v+1) W^(-3/2)",
        status=EXACT_PASS if (H - H_expected).is_zero() else FAIL))

    d1 = laplace_beltrami_one(S)
    d3 = laplace_beltrami_three(S)
    p1 = reference.delta1_printed_patch()
    p3 = reference.delta3_printed_patch()
    reports.append(printed_result_comparison(
        d1, p3, kind="assertion",
        name="computed first-operator image equals the reported third-image parametrization"))
    reports.append(printed_result_comparison(
        d1, p1, name="computed first-operator image vs reported first-image parametrization"))
    reports.append(printed_result_comparison(
        d3, p1, name="computed third-operator image vs reported first-image parametrization"))
    reports.append(printed_result_comparison(
        d3, p3, name="computed third-operator image vs reported third-image parametrization"))

    # tangential coordinates of the reported first image
    tp1 = tangent_plane(p1)
    a_p, b_p, c_corr = reference.delta1_tangential_printed("corrected")
    _, _, c_lit = reference.delta1_tangential_printed("literal")
    ok = (_ratfun_equal(tp1.a, a_p) and _ratfun_equal(tp1.b, b_p)
          and _ratfun_equal(tp1.c, c_corr))
    reports.append(VerificationReport(
        name="first-image tangential coordinates match the reported ones with the "
             "(u+1)(v+1) reading of c's denominator",
        status=EXACT_PASS if ok else FAIL))
    reports.append(VerificationReport(
        name="first-image c against the literal (v+1)(v+1) denominator",
        status=FAIL if not _ratfun_equal(tp1.c, c_lit) else EXACT_PASS,
        kind="informative",
        notes="the literal reading does not satisfy the incidence relation; "
              "first principles resolve the denominator to (u+1)(v+1)"))

    # radicands under the reported plane offsets
    reports.append(VerificationReport(
        name="first-image base polynomial equals the reported degree-6 radicand",
        status=EXACT_PASS if p1.base.canonical() == reference.t_radicand() else FAIL))
    from .mpoly import try_div
    cof = try_div(p3.base.canonical(), j)
    matches = cof is not None and cof.canonical() == reference.k_radicand()
    diff_text = ""
    if cof is not None and not matches:
        diff_text = (cof.canonical() - reference.k_radicand()).to_text()
    reports.append(VerificationReport(
        name="third-image radicand vs reported quartic",
        status=EXACT_PASS if matches else FAIL, kind="informative",
        notes="" if matches else
              "the base polynomial is j times a quartic that differs from the "
              "reported display; (v+2)^2 and 4(v+1)^2 read as (v^2+2v+2) and "
              "4(v^2+2v+2) from first principles",
        data={"computed_minus_reported": diff_text,
              "divisible_by_j": cof is not None}))

    # plane offsets, compared as squares (sign-free and radical-free)
    P1_sq = (tp1.P * tp1.P).to_ratfun()
    ratio1 = (P1_sq / reference.delta1_p_squared_printed()).normalize()
    reports.append(VerificationReport(
        name="first-image plane offset squared vs reported",
        status=EXACT_PASS if _ratfun_equal(P1_sq, reference.delta1_p_squared_printed()) else FAIL,
        kind="informative",
        notes=f"ratio computed/reported = {ratio1.to_text()}",
        data={"ratio": ratio1.to_text()}))
    tp3 = tangent_plane(p3)
    P3_sq = (tp3.P * tp3.P).to_ratfun()
    ratio3 = (P3_sq / reference.delta3_p_squared_printed()).normalize()
    reports.append(VerificationReport(
        name="third-image plane offset squared vs reported",
        status=EXACT_PASS if _ratfun_equal(P3_sq, reference.delta3_p_squared_printed()) else FAIL,
        kind="informative",
        notes=f"ratio computed/reported = {ratio3.to_text()[:120]}",
        data={"ratio": ratio3.to_text()}))

    # reported third-image tangential coordinates: orthogonality adjudication
    a3p, b3p, c3p = reference.delta3_tangential_printed("corrected")
    du = [c.diff("u") for c in p3.components]
    ortho = (a3p * du[0] + b3p * du[1] + c3p * du[2]).normalize()
    incid = (a3p * p3.components[0] + b3p * p3.components[1]
             + c3p * p3.components[2] + 1).normalize()
    match = (_ratfun_equal(tp3.a, a3p) and _ratfun_equal(tp3.b, b3p)
             and _ratfun_equal(tp3.c, c3p))
    ratio_b = (b3p / tp3.b).normalize()
    reports.append(VerificationReport(
        name="third-image tangential coordinates vs reported",
        status=EXACT_PASS if match else FAIL, kind="informative",
        notes="reported triple satisfies incidence but fails tangency"
              if (incid.is_zero() and not ortho.is_zero() and not match) else "",
        data={"incidence_zero": incid.is_zero(),
              "orthogonal_to_du": ortho.is_zero(),
              "ratio_reported_over_computed_b": ratio_b.to_text()}))

    # curvature flags and family residuals
    from .tfsurface import TFSpec, ScalarFunction
    lin_u = ScalarFunction.from_coeffs([0, 1], "u")
    lin_v = ScalarFunction.from_coeffs([0, 1], "v")
    spec_uv = TFSpec(1, 1, lin_u, lin_v)
    Kuv = gaussian_curvature(S).collapse()
    k_ratfun = Kuv.to_ratfun()
    reports.append(VerificationReport(
        name="flag: K of the f=u, g=v surface is not constant",
        status=FAIL if not k_ratfun.is_constant() else EXACT_PASS,
        kind="informative",
        notes="the surface is reported as having constant curvature; "
              "first principles give K = -1/W^2, which is non-constant"))

    fam = make_family("minimal_tan_gv", {"A": 1, "B": 1, "C1": 1, "C2": 0})
    rep = minimality_residual(fam.spec, variant="computed")
    reports.append(VerificationReport(
        name="tan-family mean curvature vanishes numerically",
        status=NUMERIC_PASS if rep.passes(1e-9) else FAIL, tolerance=1e-9,
        data={"max_abs": rep.max_abs, "skipped": rep.skipped}))
    rep_printed = minimality_residual(fam.spec, variant="printed")
    reports.append(VerificationReport(
        name="beta-less zero-mean-curvature display fails on the tan family",
        status=EXACT_PASS if rep_printed.max_abs > 1e-3 else FAIL,
        notes=f"max residual {rep_printed.max_abs:.3g} confirms the missing beta",
        data={"max_abs": rep_printed.max_abs}))

    from .tfsurface import gauss_condition_residual
    for variant, expected in (("printed", "candidate"), ("corrected", "derived")):
        try:
            famK = make_family("constantK_f", {"A": 1, "B": 2, "C": 1, "C1": 1, "C2": 3},
                               variant=variant)
        except Exception as exc:
            reports.append(VerificationReport(
                name=f"constant-curvature f-family ({variant})", status=SKIPPED,
                kind="informative", notes=str(exc)))
            continue
        r1, _ = gauss_condition_residual(famK.spec, 1,
                                         grid=GridSpec(rect=((0.0, 1.0), (0.0, 1.0))))
        reports.append(VerificationReport(
            name=f"constant-curvature f-family ({variant}) condition residual",
            status=NUMERIC_PASS if r1.max_abs < 1e-6 else FAIL, kind="informative",
            notes=f"max |(A+Bf)f'' - C f'^2| = {r1.max_abs:.3g} on (0,1)^2",
            data={"max_abs": r1.max_abs, "skipped": r1.skipped}))

    if deep:
        from .implicit import EliminationConfig, class_of, implicitize_interpolation
        cfg = EliminationConfig(method="interp", time_budget=1700)
        res1 = class_of(p1, cfg)
        top = {e: c for e, c in res1.surface.poly.terms.items()
               if sum(e) == res1.class_degree}
        reports.append(VerificationReport(
            name="first-image minimal tangential equation",
            status=EXACT_PASS, kind="informative",
            notes=f"minimal class {res1.class_degree} with {len(res1.surface.poly.terms)} terms; "
                  f"reported class {reference.REPORTED_CLASSES['paper-deltaI']}",
            data={"class": res1.class_degree, "terms": len(res1.surface.poly.terms)}))
        res3 = class_of(p3, cfg)
        reports.append(VerificationReport(
            name="third-image minimal tangential equation",
            status=EXACT_PASS, kind="informative",
            notes=f"minimal class {res3.class_degree} with {len(res3.surface.poly.terms)} terms; "
                  f"reported class {reference.REPORTED_CLASSES['paper-deltaIII']}",
            data={"class": res3.class_degree, "terms": len(res3.surface.poly.terms)}))
        rep_map = reference.delta3_tangential_printed_map()
        rep_surface = implicitize_interpolation(rep_map, cfg)
        reports.append(VerificationReport(
            name="reported third-image tangential map reproduces the class-15 equation",
            status=EXACT_PASS if rep_surface.degree == 15 else FAIL, kind="informative",
            data={"degree": rep_surface.degree,
                  "terms": len(rep_surface.poly.terms)}))
    return reports
