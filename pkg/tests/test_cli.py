"""
Tests for the command-line front end
"""

import json
from unittest.mock import patch

import pytest

from ncmod.cli import EXIT_FAILED, EXIT_MALFORMED, EXIT_OK, EXIT_USAGE, main
from ncmod.config import settings
from ncmod.models.report import SuiteFailure, SuiteReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestAlgebraCommands:
    """Test algebra inspection and multiplication"""

    def test_list(self, capsys):
        code, out, _ = run(capsys, "algebras", "list")
        assert code == EXIT_OK
        names = [item["name"] for item in json.loads(out)]
        assert names == ["rational", "complex", "quaternion", "octonion", "matrix2", "zero1"]

    def test_show(self, capsys):
        code, out, _ = run(capsys, "algebra", "show", "matrix2")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["unit"] == "1,0,0,1"
        assert payload["classification"]["center_dim"] == 1
        assert payload["table"][1][2] == "E11"

    def test_show_zero1_has_no_unit(self, capsys):
        _, out, _ = run(capsys, "algebra", "show", "zero1")
        assert json.loads(out)["unit"] is None

    def test_mul(self, capsys):
        code, out, _ = run(capsys, "mul", "--algebra", "quaternion", "0,1,0,0", "0,0,1,0")
        assert code == EXIT_OK
        assert json.loads(out)["result"] == {"coords": "0,0,0,1", "text": "k"}

    def test_commutator_text(self, capsys):
        code, out, _ = run(
            capsys, "--text", "mul", "--algebra", "quaternion", "--op", "commutator", "0,1,0,0", "0,0,1,0"
        )
        assert code == EXIT_OK
        assert out.strip() == "2*k"

    def test_associator_arity(self, capsys):
        code, _, err = run(capsys, "mul", "--algebra", "octonion", "--op", "associator", "1,0,0,0,0,0,0,0")
        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_unknown_algebra(self, capsys):
        code, _, err = run(capsys, "mul", "--algebra", "sedenion", "1", "1")
        assert code == EXIT_USAGE
        assert "sedenion" in err

    def test_bad_element(self, capsys):
        code, _, _ = run(capsys, "mul", "--algebra", "complex", "1,x", "0,1")
        assert code == EXIT_USAGE


class TestFileCommands:
    """Test commands that read JSON files"""

    def test_mat_rc(self, capsys, tmp_path):
        a = write(tmp_path / "a.json", {"rows": 2, "cols": 2, "algebra": None, "entries": [["1", "2"], ["3", "4"]]})
        b = write(tmp_path / "b.json", {"rows": 2, "cols": 2, "algebra": None, "entries": [["0", "1"], ["1", "0"]]})
        code, out, _ = run(capsys, "mat", "--op", "rc", a, b)
        assert code == EXIT_OK
        assert json.loads(out)["entries"] == [["2", "1"], ["4", "3"]]
        _, out, _ = run(capsys, "mat", "--op", "cr", b, a)
        assert json.loads(out)["entries"] == [["2", "1"], ["4", "3"]]

    def test_mat_shape_error(self, capsys, tmp_path):
        a = write(tmp_path / "a.json", {"rows": 1, "cols": 2, "algebra": None, "entries": [["1", "2"]]})
        code, _, _ = run(capsys, "mat", "--op", "sum", a, write(tmp_path / "b.json", {"rows": 1, "cols": 1, "algebra": None, "entries": [["1"]]}))
        assert code == EXIT_USAGE

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("[1, 2", encoding="utf-8")
        code, _, err = run(capsys, "mat", "--op", "transpose", str(bad))
        assert code == EXIT_MALFORMED
        assert "error:" in err

    def test_coords(self, capsys, tmp_path):
        basis = write(
            tmp_path / "basis.json",
            {
                "algebra": "quaternion",
                "orientation": "left-column",
                "vectors": [["1,0,0,0", "0,0,0,0"], ["0,1,0,0", "1,0,0,0"]],
            },
        )
        vector = write(
            tmp_path / "v.json",
            {"algebra": "quaternion", "orientation": "left-column", "vectors": [["0,0,2,0", "0,0,0,1"]]},
        )
        code, out, _ = run(capsys, "coords", "--vector", vector, "--basis", basis)
        assert code == EXIT_OK
        assert json.loads(out) == {"result": "unique", "coords": ["0,0,1,0", "0,0,0,1"]}

    def test_coords_non_unique(self, capsys, tmp_path):
        basis = write(
            tmp_path / "basis.json",
            {
                "algebra": "quaternion",
                "orientation": "left-column",
                "vectors": [["1,0,0,0", "0,0,0,0"], ["0,1,0,0", "0,0,0,0"]],
            },
        )
        vector = write(
            tmp_path / "v.json",
            {"algebra": "quaternion", "orientation": "left-column", "vectors": [["1,1,0,0", "0,0,0,0"]]},
        )
        _, out, _ = run(capsys, "coords", "--vector", vector, "--basis", basis)
        payload = json.loads(out)
        assert payload["result"] == "non-unique"
        assert len(payload["witness"]) == 2

    def test_extend(self, capsys, tmp_path):
        basis = write(
            tmp_path / "basis.json",
            {"algebra": "quaternion", "orientation": "left-column", "vectors": [["1,0,0,0"]]},
        )
        code, out, _ = run(capsys, "extend", "--basis", basis)
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["rank"] == 4
        assert payload["full"] is True
        assert payload["vectors"] == [["1,0,0,0"], ["0,1,0,0"], ["0,0,1,0"], ["0,0,0,1"]]

    def test_hom_apply_and_compose(self, capsys, tmp_path):
        g = write(tmp_path / "g.json", {"algebra": "quaternion", "orientation": "right-column", "matrix": [["0,1,0,0"]]})
        h = write(tmp_path / "h.json", {"algebra": "quaternion", "orientation": "right-column", "matrix": [["0,0,1,0"]]})
        v = write(
            tmp_path / "v.json",
            {"algebra": "quaternion", "orientation": "right-column", "vectors": [["0,1,0,0"]]},
        )
        code, out, _ = run(capsys, "hom", "apply", "--hom", h, "--vector", v)
        assert code == EXIT_OK
        assert json.loads(out)["vectors"] == [["0,0,0,-1"]]
        _, out, _ = run(capsys, "hom", "compose", h, g)
        assert json.loads(out)["matrix"] == [["0,0,0,-1"]]
        _, out, _ = run(capsys, "hom", "sum", g, h)
        assert json.loads(out)["matrix"] == [["0,1,1,0"]]


class TestCalculusCommands:
    """Test differentiation commands"""

    def test_diff(self, capsys):
        code, out, _ = run(capsys, "diff", "--vars", "x,y,z", "--expr", "x^2*y^3 + x*z^2*x", "--wrt", "x")
        assert code == EXIT_OK
        terms = json.loads(out)["partials"][0]["terms"]
        assert terms == ["1·(1 ⊗ x*y^3)", "1·(x ⊗ y^3)", "1·(1 ⊗ z^2*x)", "1·(x*z^2 ⊗ 1)"]

    def test_diff_at_point(self, capsys):
        code, out, _ = run(
            capsys, "diff", "--vars", "x,y", "--expr", "x*y", "--wrt", "y", "--at", "0,1,0,0;0,0,1,0"
        )
        assert code == EXIT_OK
        at = json.loads(out)["partials"][0]["at"]
        assert at["tensor"] == "1·(i ⊗ 1)"
        assert len(at["map"]) == 4
        assert all(len(row) == 4 for row in at["map"])

    def test_differential(self, capsys):
        code, out, _ = run(capsys, "--text", "diff", "--vars", "x,y", "--expr", "x*y", "--differential")
        assert code == EXIT_OK
        assert out.strip() == "d(x*y) = dx*y + x*dy"

    def test_diff_syntax_error(self, capsys):
        code, _, err = run(capsys, "diff", "--vars", "x", "--expr", "x +")
        assert code == EXIT_USAGE
        assert "position" in err

    def test_jacobian(self, capsys):
        code, out, _ = run(
            capsys,
            "jacobian",
            "--vars",
            "x,y",
            "--map",
            "u = x*y",
            "--point",
            "0,1,0,0;0,0,1,0",
            "--displacement",
            "1,0,0,0;0,0,0,1",
        )
        assert code == EXIT_OK
        # 1·j + i·k
        assert json.loads(out)["components"][0]["coords"] == "0,0,0,0"

    def test_jacobian_rejects_octonion(self, capsys):
        code, _, err = run(
            capsys,
            "jacobian",
            "--algebra",
            "octonion",
            "--vars",
            "x",
            "--map",
            "u = x",
            "--point",
            "1,0,0,0,0,0,0,0",
            "--displacement",
            "1,0,0,0,0,0,0,0",
        )
        assert code == EXIT_USAGE
        assert "associative" in err


class TestVerifyCommand:
    """Test the verify command and exit codes"""

    def test_passing_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "shifts", "--algebra", "quaternion", "--trials", "2", "--seed", "4")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["seed"] == 4

    def test_seed_from_settings(self, capsys):
        with patch.object(settings, "seed", 77):
            _, out, _ = run(capsys, "verify", "--suite", "shifts", "--trials", "1")
        assert json.loads(out)["seed"] == 77

    def test_output_is_deterministic(self, capsys):
        argv = ["verify", "--suite", "duality", "--algebra", "matrix2", "--trials", "2", "--seed", "3"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_failures_exit_one(self, capsys):
        failing = SuiteReport(
            suite="shifts",
            algebra="quaternion",
            trials=1,
            seed=0,
            passed=False,
            failures=[SuiteFailure(law="shifts-commute")],
        )
        with patch("ncmod.cli.run_suite", return_value=failing):
            code, out, _ = run(capsys, "verify", "--suite", "shifts", "--trials", "1", "--seed", "0")
        assert code == EXIT_FAILED
        assert json.loads(out)["failures"][0]["law"] == "shifts-commute"

    def test_invalid_trials(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "shifts", "--trials", "0", "--seed", "0")
        assert code == EXIT_USAGE
        assert "trials" in err

    @pytest.mark.parametrize("argv", [["verify", "--suite", "nope"], ["frobnicate"], []])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == EXIT_USAGE

    def test_bad_environment_is_usage_error(self, capsys):
        problems = ["NCMOD_SEED: Input should be a valid integer"]
        with patch("ncmod.cli.settings_errors", problems):
            code, out, err = run(capsys, "verify", "--suite", "shifts", "--trials", "1")
        assert code == EXIT_USAGE
        assert out == ""
        assert err == "error: NCMOD_SEED: Input should be a valid integer\n"

    def test_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == EXIT_OK
        assert "verify" in out

    def test_failures_grouped_by_law_in_text(self, capsys):
        failing = SuiteReport(
            suite="shifts",
            algebra="quaternion",
            trials=2,
            seed=0,
            passed=False,
            failures=[
                SuiteFailure(law="shifts-commute", detail="trial 0"),
                SuiteFailure(law="shifts-commute", detail="trial 1"),
                SuiteFailure(law="unit-law", detail="trial 1"),
            ],
        )
        with patch("ncmod.cli.run_suite", return_value=failing):
            code, out, _ = run(capsys, "--text", "verify", "--suite", "shifts", "--seed", "0")
        assert code == EXIT_FAILED
        assert "  FAIL shifts-commute (2x): trial 0" in out.splitlines()
        assert "  FAIL unit-law (1x): trial 1" in out.splitlines()
