"""Command-line interface: configs, commands, exit codes, artifacts."""

import json
import os

import pytest

from surfalg.cli import (EXIT_BUDGET, EXIT_CONFIG, EXIT_OK, EXIT_VERIFY,
                         ConfigError, build_surface, main, parse_config)
from surfalg import reference


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestConfig:
    def test_parse_values(self, tmp_path):
        cfg = parse_config(write(tmp_path, "c.cfg", """
# comment
surface = "paper-S"
n = 21
tol = 1e-9
half = 1/2
coeffs = [0, 1, 2/3]
flag = true
"""))
        assert cfg["surface"] == "paper-S"
        assert cfg["n"] == 21 and cfg["flag"] is True
        assert cfg["half"] == 0.5 or str(cfg["half"]) == "1/2"
        assert cfg["coeffs"][2] == 2 / 3 or str(cfg["coeffs"][2]) == "2/3"

    def test_bad_line(self, tmp_path):
        with pytest.raises(ConfigError):
            parse_config(write(tmp_path, "c.cfg", "not a kv line\n"))

    def test_builtins(self):
        for name in reference.BUILTIN_SURFACES:
            got_name, patch = build_surface({}, name)
            assert got_name == name

    def test_tf_spec_surface(self, tmp_path):
        cfg = parse_config(write(tmp_path, "c.cfg", """
A = 1
B = 1
f_kind = "poly"
f_coeffs = [0, 1]
g_kind = "poly"
g_coeffs = [0, 1]
"""))
        name, patch = build_surface(cfg)
        assert patch.components[2].to_text() == "u*v + u + v"

    def test_family_surface(self, tmp_path):
        cfg = parse_config(write(tmp_path, "c.cfg", """
family = "minimal_tan_gv"
constants = [1, 1, 1, 0]
"""))
        name, patch = build_surface(cfg)
        from surfalg.tfsurface import AnalyticTFPatch
        assert isinstance(patch, AnalyticTFPatch)

    def test_no_surface(self):
        with pytest.raises(ConfigError):
            build_surface({})


class TestCommands:
    def test_analyze_reference(self, tmp_path, capsys):
        out = str(tmp_path / "r.json")
        code = main(["--surface", "paper-S", "--out", out, "analyze"])
        assert code == EXIT_OK
        report = json.loads(open(out).read())
        assert report["K"].startswith("[-1]")
        assert report["W"] == "u^2 + v^2 + 2*u + 2*v + 3"

    def test_analyze_plane_spec(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
A = 1
B = 1
f_coeffs = [0]
g_coeffs = [0]
""")
        out = str(tmp_path / "r.json")
        code = main(["--config", cfg, "--out", out, "analyze"])
        assert code == EXIT_OK
        report = json.loads(open(out).read())
        assert report["H"] == "0" and report["K"] == "0"

    def test_analyze_analytic_family(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
family = "minimal_tan_gv"
constants = [1, 1, 1, 0]
""")
        out = str(tmp_path / "r.json")
        assert main(["--config", cfg, "--out", out, "analyze"]) == EXIT_OK
        report = json.loads(open(out).read())
        assert report["mode"] == "numeric"
        assert abs(report["H"]["max"]) < 1e-9  # the family is minimal

    def test_analyze_translation_reports_zero_m(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
A = 1
B = 0
f_coeffs = [0, 0, 1]
g_coeffs = [0, 1]
""")
        out = str(tmp_path / "r.json")
        assert main(["--config", cfg, "--out", out, "analyze"]) == EXIT_OK
        assert json.loads(open(out).read())["m"] == "0"

    def test_lb_three_matches_reported_comparison(self, tmp_path):
        out = str(tmp_path / "lb.json")
        code = main(["--surface", "paper-S", "--out", out, "lb", "--which", "III"])
        assert code == EXIT_OK
        rep = json.loads(open(out).read())
        comp = rep["comparisons"]
        assert comp["paper-deltaI"]["notes"].startswith("pointwise parallel")
        assert comp["paper-deltaIII"]["status"] == "fail"

    def test_lb_one_equals_reported_third(self, tmp_path):
        out = str(tmp_path / "lb.json")
        assert main(["--surface", "paper-S", "--out", out, "lb", "--which", "I"]) == EXIT_OK
        rep = json.loads(open(out).read())
        assert rep["comparisons"]["paper-deltaIII"]["status"] == "exact-pass"

    def test_lb_linear_patch_zero(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
A = 1
B = 0
f_coeffs = [0, 2]
g_coeffs = [3, 1]
""")
        out = str(tmp_path / "lb.json")
        assert main(["--config", cfg, "--out", out, "lb", "--which", "I"]) == EXIT_OK
        rep = json.loads(open(out).read())
        assert rep["components"] == ["0", "0", "0"]

    def test_implicitize_first_image(self, tmp_path):
        out = str(tmp_path / "q.json")
        code = main(["--surface", "paper-deltaI", "--out", out,
                     "implicitize", "--method", "groebner"])
        assert code == EXIT_OK
        rep = json.loads(open(out).read())
        assert rep["Q"] == reference.Q_DELTA1_TEXT
        assert rep["degree"] == 6

    def test_implicitize_product_spec(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
A = 0
B = 1
f_coeffs = [0, 1]
g_coeffs = [0, 1]
""")
        out = str(tmp_path / "q.json")
        assert main(["--config", cfg, "--out", out, "implicitize"]) == EXIT_OK
        assert json.loads(open(out).read())["Q"] == "x*y - z"

    def test_implicitize_budget_exceeded(self, tmp_path):
        code = main(["--surface", "paper-deltaI", "implicitize",
                     "--method", "groebner", "--budget-seconds", "1e-9"])
        assert code == EXIT_BUDGET

    def test_class_paraboloid_spec(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
A = 1
B = 0
f_coeffs = [0, 0, 1]
g_coeffs = [0, 0, 1]
""")
        out = str(tmp_path / "class.json")
        code = main(["--config", cfg, "--out", out, "class", "--method", "interp"])
        assert code == EXIT_OK
        rep = json.loads(open(out).read())
        assert rep["class"] == 2
        assert rep["Qhat"] == "a^2 + b^2 - 4*c"

    def test_mesh(self, tmp_path, capsys, monkeypatch):
        monkeypatch.chdir(tmp_path)
        out = str(tmp_path / "m.obj")
        code = main(["--surface", "paper-S", "--out", out, "mesh", "--grid", "5x5"])
        assert code == EXIT_OK
        assert os.path.exists(out)
        assert os.path.exists(str(tmp_path / "m.csv"))
        head = open(out).read().splitlines()
        assert sum(1 for line in head if line.startswith("v ")) == 25
        assert sum(1 for line in head if line.startswith("f ")) == 32

    def test_mesh_analytic_family(self, tmp_path):
        # f(u) = u with g(v) = tan(v): the classic zero-mean-curvature figure
        cfg = write(tmp_path, "c.cfg", """
A = 1
B = 1
f_kind = "poly"
f_coeffs = [0, 1]
g_kind = "tan"
g_params = [0, 1, 1, 0]
""")
        out = str(tmp_path / "fig.obj")
        code = main(["--config", cfg, "--out", out, "mesh", "--grid", "9x9"])
        assert code == EXIT_OK
        assert os.path.exists(out)
        body = open(out).read()
        assert body.count("\nv ") >= 60  # a few pole points may be skipped

    def test_mesh_squares_family(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
A = 1
B = 1
f_kind = "poly"
f_coeffs = [0, 0, 1]
g_kind = "poly"
g_coeffs = [0, 0, 1]
""")
        out = str(tmp_path / "sq.obj")
        assert main(["--config", cfg, "--out", out, "mesh", "--grid", "6x6"]) == EXIT_OK
        assert open(out).read().count("\nf ") == 50

    def test_mesh_degenerate_grid(self):
        assert main(["--surface", "paper-S", "mesh", "--grid", "1x1"]) == EXIT_CONFIG

    def test_mesh_bad_grid_flag(self):
        assert main(["--surface", "paper-S", "mesh", "--grid", "nope"]) == EXIT_CONFIG

    def test_verify_shallow(self, tmp_path, capsys):
        out = str(tmp_path / "verify.json")
        code = main(["--out", out, "verify"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert any("degree-6" in line for line in lines)
        payload = json.loads(open(out).read())
        assert any(r["status"] == "fail" and r["kind"] == "informative"
                   for r in payload["reports"])

    def test_shared_flags_accepted_after_subcommand(self, tmp_path):
        out = str(tmp_path / "r.json")
        assert main(["analyze", "--surface", "paper-S", "--out", out]) == EXIT_OK
        assert json.loads(open(out).read())["W"] == "u^2 + v^2 + 2*u + 2*v + 3"

    def test_unknown_surface(self):
        assert main(["--surface", "nope", "analyze"]) == EXIT_CONFIG

    def test_usage_error_maps_to_config_exit(self):
        assert main(["not-a-command"]) == EXIT_CONFIG

    def test_analytic_rejected_for_lb(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
family = "minimal_tan_gv"
constants = [1, 1, 1, 0]
""")
        assert main(["--config", cfg, "lb", "--which", "I"]) == EXIT_CONFIG

    def test_analytic_rejected_for_implicitize(self, tmp_path):
        cfg = write(tmp_path, "c.cfg", """
family = "minimal_tan_gv"
constants = [1, 1, 1, 0]
""")
        assert main(["--config", cfg, "implicitize"]) == EXIT_CONFIG


class TestSelfTest:
    def test_startup_self_test_guards_registry(self, monkeypatch):
        import surfalg.cli as cli
        import surfalg.reference as ref
        from surfalg.mpoly import MPoly
        tampered = MPoly.parse("x + y + z", ("x", "y", "z"))
        monkeypatch.setattr(ref, "q_delta3", lambda: tampered)
        monkeypatch.setattr(cli.reference, "q_delta3", lambda: tampered)
        assert cli.main(["--surface", "paper-S", "analyze"]) == EXIT_VERIFY
