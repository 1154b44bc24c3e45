"""Command-line front end.

Subcommands: analyze, lb, implicitize, class, mesh, verify.  Surfaces come
from a flat key=value config file or from the built-in registry
("paper-S", "paper-deltaI", "paper-deltaIII").  Reports are deterministic
JSON (timings go to stderr so reruns stay byte-identical); exit codes:
0 success, 2 verification failure, 3 budget exceeded, 4 bad config.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import reference
from .groebner import BudgetExceededError
from .implicit import (EliminationConfig, ImplicitNotFoundError, ParametricMap3,
                       class_of, implicitize, implicitize_groebner,
                       implicitize_interpolation)
from .mpoly import MPoly, PolynomialError
from .meshio import sample_grid, write_csv, write_obj
from .surface import (ConeThroughOriginError, DegeneratePatchError,
                      FlatSurfaceError, UnsupportedPatchError,
                      fundamental_forms, gaussian_curvature,
                      laplace_beltrami_one, laplace_beltrami_three,
                      mean_curvature)
from .tfsurface import (AnalyticTFPatch, FamilyConstraintError, GridSpec,
                        ScalarFunction, TFSpec, cos_scalar, make_family,
                        make_tf_patch, tan_scalar)
from .verify import full_suite, printed_result_comparison, substitution_check

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_BUDGET = 3
EXIT_CONFIG = 4


class ConfigError(ValueError):
    pass


# -- config file -----------------------------------------------------------


def _parse_value(text):
    text = text.strip()
    if not text:
        raise ConfigError("empty value")
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1]
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [_parse_value(part) for part in inner.split(",")]
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    try:
        if "/" in text:
            return Fraction(text)
        if "." in text or "e" in low:
            return float(text)
        return int(text)
    except ValueError as exc:
        raise ConfigError(f"cannot parse value {text!r}") from exc


def parse_config(path):
    """Flat key = value lines; '#' starts a comment."""
    out = {}
    try:
        with open(path) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, _, value = line.partition("=")
                out[key.strip()] = _parse_value(value)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return out


_SCALAR_KINDS = ("poly", "tan", "cos", "pow")


def _scalar_from_config(cfg, prefix, var):
    kind = cfg.get(f"{prefix}_kind", "poly")
    if kind == "poly":
        coeffs = cfg.get(f"{prefix}_coeffs", [0, 1])
        return ScalarFunction.from_coeffs([Fraction(c) for c in coeffs], var)
    params = cfg.get(f"{prefix}_params", [])
    if kind == "tan":
        if len(params) != 4:
            raise ConfigError(f"{prefix}_params for tan needs [A, B, C1, C2]")
        return tan_scalar(*params)
    if kind == "cos":
        if len(params) not in (0, 2):
            raise ConfigError(f"{prefix}_params for cos needs [scale, shift]")
        return cos_scalar(*params) if params else cos_scalar()
    if kind == "pow":
        from .tfsurface import power_scalar
        if len(params) != 5:
            raise ConfigError(f"{prefix}_params for pow needs [K, C1, C2, exponent, offset]")
        return power_scalar(*params)
    raise ConfigError(f"unknown scalar kind {kind!r}; choose from {_SCALAR_KINDS}")


def build_surface(cfg, name=None):
    """Resolve a surface: built-in name, family spec, or TF spec."""
    name = name or cfg.get("surface")
    if name:
        if name in reference.BUILTIN_SURFACES:
            return name, reference.builtin_patch(name)
        raise ConfigError(f"unknown built-in surface {name!r}; "
                          f"choose from {reference.BUILTIN_SURFACES}")
    if "family" in cfg:
        constants = cfg.get("constants", [])
        keys = ("A", "B", "C1", "C2", "C")[:len(constants)]
        fam = make_family(cfg["family"], dict(zip(keys, constants)),
                          variant=cfg.get("variant", "printed"))
        return cfg["family"], make_tf_patch(fam.spec)
    if "A" in cfg or "B" in cfg:
        spec = TFSpec(Fraction(cfg.get("A", 1)), Fraction(cfg.get("B", 1)),
                      _scalar_from_config(cfg, "f", "u"),
                      _scalar_from_config(cfg, "g", "v"))
        return "tf-spec", make_tf_patch(spec)
    raise ConfigError("config defines no surface (need surface=, family=, or A/B with f/g)")


# -- report output -----------------------------------------------------------


def _emit(report, out, timings=None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if timings:
        sys.stderr.write(json.dumps({"timings_seconds": timings}) + "\n")


def _elim_config(args):
    kwargs = {}
    if args.method:
        kwargs["method"] = {"groebner": "groebner", "interp": "interp"}[args.method]
    if args.dmax:
        kwargs["dmax"] = args.dmax
    if args.budget_seconds:
        kwargs["time_budget"] = args.budget_seconds
    return EliminationConfig(**kwargs)


# -- commands -----------------------------------------------------------------


def cmd_analyze(args, cfg):
    name, patch = build_surface(cfg, args.surface)
    t0 = time.monotonic()
    if isinstance(patch, AnalyticTFPatch):
        grid = GridSpec()
        hs, ks = [], []
        for i in range(grid.n):
            for jdx in range(grid.n):
                uu = -1 + 2 * i / (grid.n - 1)
                vv = -1 + 2 * jdx / (grid.n - 1)
                if patch.distance_to_singularity(uu, vv) < grid.skip_radius:
                    continue
                d = patch.point_data(uu, vv)
                hs.append(d["H"])
                ks.append(d["K"])
        report = {"command": "analyze", "surface": name, "mode": "numeric",
                  "grid": f"{grid.n}x{grid.n}",
                  "H": {"min": min(hs), "max": max(hs)},
                  "K": {"min": min(ks), "max": max(ks)}}
    else:
        forms = fundamental_forms(patch)
        report = {
            "command": "analyze", "surface": name, "mode": "symbolic",
            "E": forms.E.to_text(), "F": forms.F.to_text(), "G": forms.G.to_text(),
            "l": forms.l.to_text(), "m": forms.m.to_text(), "n": forms.n.to_text(),
            "W": patch.base.canonical_text(),
            "H": mean_curvature(patch).to_text(),
            "K": gaussian_curvature(patch).to_text(),
        }
    _emit(report, args.out, {"analyze": round(time.monotonic() - t0, 3)})
    return EXIT_OK


def cmd_lb(args, cfg):
    name, patch = build_surface(cfg, args.surface)
    if isinstance(patch, AnalyticTFPatch):
        raise ConfigError("the operator commands need a polynomial (symbolic) spec")
    t0 = time.monotonic()
    image = laplace_beltrami_one(patch) if args.which == "I" else laplace_beltrami_three(patch)
    report = {"command": "lb", "which": args.which, "surface": name,
              "components": [c.to_text() for c in image.components]}
    if name == "paper-S":
        comparisons = {}
        for ref_name in ("paper-deltaI", "paper-deltaIII"):
            rep = printed_result_comparison(image, reference.builtin_patch(ref_name))
            comparisons[ref_name] = {"status": rep.status, "notes": rep.notes,
                                     "witness": rep.witness}
        report["comparisons"] = comparisons
    _emit(report, args.out, {"lb": round(time.monotonic() - t0, 3)})
    return EXIT_OK


def _surface_map(name, patch):
    if isinstance(patch, AnalyticTFPatch):
        raise ConfigError("implicitization needs a rational (symbolic) surface")
    return ParametricMap3.from_patch(patch)


def cmd_implicitize(args, cfg):
    name, patch = build_surface(cfg, args.surface)
    m = _surface_map(name, patch)
    elim = _elim_config(args)
    t0 = time.monotonic()
    if elim.method == "groebner":
        surface = implicitize_groebner(m, elim)
    elif elim.method == "interp":
        surface = implicitize_interpolation(m, elim)
    else:
        surface = implicitize(m, elim)
    report = {"command": "implicitize", "surface": name,
              "Q": surface.poly.canonical_text(),
              "degree": surface.degree, "method": surface.method}
    _emit(report, args.out, {"implicitize": round(time.monotonic() - t0, 3),
                             **{k: v for k, v in surface.notes.items() if k == "seconds"}})
    return EXIT_OK


def cmd_class(args, cfg):
    name, patch = build_surface(cfg, args.surface)
    if isinstance(patch, AnalyticTFPatch):
        raise ConfigError("class computation needs a rational (symbolic) surface")
    elim = _elim_config(args)
    t0 = time.monotonic()
    result = class_of(patch, elim)
    Q = result.surface.poly
    top = sorted((e for e in Q.terms if sum(e) == result.class_degree),
                 reverse=True)
    top_text = MPoly(Q.vars, {e: Q.terms[e] for e in top}).canonical_text()
    report = {"command": "class", "surface": name,
              "class": result.class_degree,
              "leading_terms": top_text,
              "n_terms": len(Q.terms),
              "n_lower_terms": len(Q.terms) - len(top),
              "Qhat": Q.canonical_text(),
              "method": result.surface.method}
    if name in reference.REPORTED_CLASSES:
        reported = reference.REPORTED_CLASSES[name]
        report["reported_class"] = reported
        if reported != result.class_degree:
            report["adjudication"] = (
                "first-principles tangential elimination gives a lower degree "
                "than the reported class; see the verification report")
    _emit(report, args.out, {"class": round(time.monotonic() - t0, 3)})
    return EXIT_OK


def cmd_mesh(args, cfg):
    name, patch = build_surface(cfg, args.surface)
    try:
        nu, nv = (int(x) for x in args.grid.split("x"))
    except (ValueError, AttributeError) as exc:
        raise ConfigError("mesh needs --grid NuxNv, e.g. --grid 40x40") from exc
    if nu < 2 or nv < 2:
        raise ConfigError("mesh grids need at least 2 samples per direction")
    rect_cfg = cfg.get("mesh_rect", [-1.0, 1.0, -1.0, 1.0])
    rect = ((float(rect_cfg[0]), float(rect_cfg[1])),
            (float(rect_cfg[2]), float(rect_cfg[3])))
    t0 = time.monotonic()
    rows, skipped = sample_grid(patch, rect=rect, nu=nu, nv=nv)
    out = args.out or "surface.obj"
    nverts, nfaces = write_obj(rows, out)
    csv_path = out.rsplit(".", 1)[0] + ".csv"
    nsamples = write_csv(rows, csv_path)
    if skipped:
        sys.stderr.write(f"warning: {skipped} singular grid points skipped\n")
    report = {"command": "mesh", "surface": name, "obj": out, "csv": csv_path,
              "vertices": nverts, "faces": nfaces, "samples": nsamples,
              "skipped": skipped}
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    sys.stderr.write(json.dumps({"timings_seconds":
                                 {"mesh": round(time.monotonic() - t0, 3)}}) + "\n")
    return EXIT_OK


def cmd_verify(args, cfg):
    t0 = time.monotonic()
    reports = full_suite(deep=args.deep)
    payload = {"command": "verify",
               "reports": [{"name": r.name, "status": r.status, "kind": r.kind,
                            "notes": r.notes, "witness": r.witness,
                            "tolerance": r.tolerance, "data": r.data}
                           for r in reports]}
    for r in reports:
        sys.stdout.write(r.oneline() + "\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
    sys.stderr.write(json.dumps({"timings_seconds":
                                 {"verify": round(time.monotonic() - t0, 3)}}) + "\n")
    bad = [r for r in reports if r.kind == "assertion" and not r.ok
           and r.status != "skipped"]
    return EXIT_VERIFY if bad else EXIT_OK


def _startup_self_test():
    rep = substitution_check(reference.delta3_printed_map(), reference.q_delta3())
    if not rep.ok:
        sys.stderr.write("self-test failed: the built-in third-image map does not "
                         "satisfy its implicit equation\n")
        return False
    return True


def _parser():
    # the shared flags are accepted both before and after the subcommand;
    # SUPPRESS keeps an unset subparser flag from clobbering the global one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="key = value config file")
    common.add_argument("--surface", default=argparse.SUPPRESS,
                        help="built-in surface name")
    common.add_argument("--out", default=argparse.SUPPRESS,
                        help="output path (default: stdout)")
    p = argparse.ArgumentParser(
        prog="surfalg", parents=[common],
        description="Exact curvature, operator-image, and implicitization "
                    "toolkit for TF-type parametric surfaces.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common],
                   help="fundamental forms and curvatures")
    lb = sub.add_parser("lb", parents=[common],
                        help="operator image of the position vector")
    lb.add_argument("--which", choices=("I", "III"), default="I")
    for cname in ("implicitize", "class"):
        c = sub.add_parser(cname, parents=[common])
        c.add_argument("--method", choices=("groebner", "interp"))
        c.add_argument("--dmax", type=int)
        c.add_argument("--budget-seconds", type=float)
    mesh = sub.add_parser("mesh", parents=[common],
                          help="sample a grid and write OBJ + CSV")
    mesh.add_argument("--grid", default="20x20")
    ver = sub.add_parser("verify", parents=[common],
                         help="run the adjudication suite")
    ver.add_argument("--deep", action="store_true",
                     help="include the slow tangential eliminations")
    return p


_DISPATCH = {"analyze": cmd_analyze, "lb": cmd_lb, "implicitize": cmd_implicitize,
             "class": cmd_class, "mesh": cmd_mesh, "verify": cmd_verify}


def main(argv=None):
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    for name in ("config", "surface", "out"):
        if not hasattr(args, name):
            setattr(args, name, None)
    if not _startup_self_test():
        return EXIT_VERIFY
    try:
        cfg = parse_config(args.config) if args.config else {}
        return _DISPATCH[args.command](args, cfg)
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}; consider --method interp or a larger "
                         f"--budget-seconds\n")
        return EXIT_BUDGET
    except (ConfigError, FamilyConstraintError, KeyError) as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except (DegeneratePatchError, FlatSurfaceError, ConeThroughOriginError,
            UnsupportedPatchError, ImplicitNotFoundError, PolynomialError,
            ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
