"""Tests for CLI functionality."""

import json
import math
from unittest.mock import patch

import pytest

from octoeigen import __version__
from octoeigen.cli.main import app
from octoeigen.core.calibration import NoConsistentTable
from octoeigen.core.catalog import example1
from octoeigen.core.properties import IdentityResult, PropertyReport
from octoeigen.core.verification import CheckResult, VerificationReport


def make_report(*statuses):
    checks = [
        CheckResult(name=f"check_{index}", criterion=index, status=status, provenance="derived")
        for index, status in enumerate(statuses)
    ]
    counts = {status: sum(1 for check in checks if check.status == status) for status in ("pass", "fail", "discrepancy")}
    return VerificationReport(table_convention="cayley-dickson", seed=0, checks=checks, counts=counts)


class TestCLI:
    """Test CLI commands."""

    def test_cli_help(self, runner):
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for command in ("verify-paper", "eigs", "nullity", "property-suite", "calibrate"):
            assert command in result.stdout

    def test_version_command(self, runner):
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert f"octoeigen version: {__version__}" in result.stdout

    def test_calibrate_command(self, runner):
        result = runner.invoke(app, ["calibrate"])
        assert result.exit_code == 0
        assert "Active" in result.stdout
        assert "i*j=k" in result.stdout

    def test_verbose_flag(self, runner):
        result = runner.invoke(app, ["--verbose", "version"])
        assert result.exit_code == 0


class TestVerifyPaper:
    @patch("octoeigen.cli.main.ExampleVerifier")
    def test_all_pass(self, mock_verifier_class, runner):
        mock_verifier_class.return_value.run.return_value = make_report("pass", "pass", "discrepancy")
        result = runner.invoke(app, ["verify-paper", "--seed", "5", "--restarts", "3"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["counts"] == {"pass": 2, "fail": 0, "discrepancy": 1}
        kwargs = mock_verifier_class.call_args.kwargs
        assert kwargs["seed"] == 5
        assert kwargs["settings"].triple_restarts == 3

    @patch("octoeigen.cli.main.ExampleVerifier")
    def test_failure_exit_code(self, mock_verifier_class, runner):
        mock_verifier_class.return_value.run.return_value = make_report("pass", "fail")
        result = runner.invoke(app, ["verify-paper"])
        assert result.exit_code == 1
        assert json.loads(result.stdout)["checks"][1]["status"] == "fail"

    @patch("octoeigen.cli.main.ExampleVerifier")
    def test_tolerance_option(self, mock_verifier_class, runner):
        mock_verifier_class.return_value.run.return_value = make_report("pass")
        result = runner.invoke(app, ["verify-paper", "--tol", "1e-6"])
        assert result.exit_code == 0
        assert mock_verifier_class.call_args.kwargs["settings"].nullity_tol == 1e-6

    @patch("octoeigen.cli.main.ExampleVerifier")
    def test_text_format(self, mock_verifier_class, runner):
        mock_verifier_class.return_value.run.return_value = make_report("pass", "discrepancy")
        result = runner.invoke(app, ["verify-paper", "--format", "text"])
        assert result.exit_code == 0
        assert "check_1" in result.stdout
        assert "discrepanc" in result.stdout


class TestEigs:
    def test_example1(self, runner):
        result = runner.invoke(app, ["eigs", "--example", "1", "--p", "0", "--q", "1", "--theta", "0"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        families = [family["lambdas"] for family in data["families"]]
        assert families[0] == pytest.approx([-2.0, 1.0, 1.0], abs=1e-6)
        assert families[1] == pytest.approx([-1.0, -1.0, 2.0], abs=1e-6)
        assert data["nonreal"] == []

    def test_matrix_file(self, runner, matrix_file):
        path = matrix_file({"p": 1.0, "m": 2.0, "n": 3.0})
        result = runner.invoke(app, ["eigs", str(path)])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["families"][0]["lambdas"] == pytest.approx([1.0, 2.0, 3.0])
        assert data["families"][0]["nullities"] == [8, 8, 8]
        assert data["matrix"]["m"] == 2.0

    def test_example_file_with_override(self, runner, matrix_file):
        path = matrix_file({"example": 1, "p": 5.0, "q": 1.0})
        result = runner.invoke(app, ["eigs", str(path), "--p", "0"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["matrix"]["p"] == 0.0

    def test_text_format(self, runner):
        result = runner.invoke(app, ["eigs", "--example", "2", "--format", "text"])
        assert result.exit_code == 0
        assert "Real eigenvalue families" in result.stdout

    def test_requires_input(self, runner):
        result = runner.invoke(app, ["eigs"])
        assert result.exit_code == 2

    def test_rejects_both_inputs(self, runner, matrix_file):
        path = matrix_file({"p": 1.0, "m": 2.0, "n": 3.0})
        result = runner.invoke(app, ["eigs", str(path), "--example", "1"])
        assert result.exit_code == 2

    def test_parse_error(self, runner, matrix_file):
        path = matrix_file({"p": 1.0, "m": 2.0, "n": 3.0, "a": [1, 2]})
        result = runner.invoke(app, ["eigs", str(path)])
        assert result.exit_code == 2
        assert result.stdout == ""

    def test_example_out_of_range(self, runner):
        result = runner.invoke(app, ["eigs", "--example", "4"])
        assert result.exit_code == 2

    @pytest.mark.parametrize("value", ["nan", "inf"])
    def test_non_finite_override(self, runner, value):
        result = runner.invoke(app, ["eigs", "--example", "1", "--p", value])
        assert result.exit_code == 2
        assert result.stdout == ""

    def test_non_finite_file(self, runner, matrix_file):
        path = matrix_file('{"example": 2, "q": NaN}')
        result = runner.invoke(app, ["eigs", str(path)])
        assert result.exit_code == 2
        assert result.stdout == ""

    @patch("octoeigen.cli.main.calibrate_table")
    def test_no_consistent_table(self, mock_calibrate, runner):
        mock_calibrate.side_effect = NoConsistentTable(128)
        result = runner.invoke(app, ["eigs", "--example", "1"])
        assert result.exit_code == 1

    def test_search(self, runner):
        result = runner.invoke(
            app, ["eigs", "--example", "1", "--theta", str(math.pi / 4), "--search", "--seeds", "2", "--seed", "3"]
        )
        assert result.exit_code == 0
        for pair in json.loads(result.stdout)["nonreal"]:
            assert pair["residual"] <= 1e-8
            assert len(pair["lam"]) == 8


class TestNullity:
    def test_example1_eigenvalues(self, runner, table):
        theta = math.pi / 5
        case = example1(1.0, 2.0, theta, table)
        args = ["nullity", "--example", "1", "--p", "1", "--q", "2", "--theta", repr(theta)]
        for name, expected in (("w_plus", 1), ("u_plus", 5)):
            lam = json.dumps(case.pair(name).lam.to_list())
            result = runner.invoke(app, args + ["--lambda", lam])
            assert result.exit_code == 0, result.output
            data = json.loads(result.stdout)
            assert data["nullity"] == expected
            assert data["tolerance"] == 1e-7

    def test_expression_lambda(self, runner, matrix_file):
        path = matrix_file({"p": 1.0, "m": 2.0, "n": 3.0})
        result = runner.invoke(app, ["nullity", str(path), "--lambda", "2", "--format", "text"])
        assert result.exit_code == 0
        assert "8" in result.stdout

    def test_bad_lambda(self, runner):
        result = runner.invoke(app, ["nullity", "--example", "1", "--lambda", "2 3"])
        assert result.exit_code == 2

    def test_lambda_required(self, runner):
        result = runner.invoke(app, ["nullity", "--example", "1"])
        assert result.exit_code == 2


class TestPropertySuite:
    def test_single_trial(self, runner):
        result = runner.invoke(app, ["property-suite", "--trials", "1", "--seed", "42"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["seed"] == 42
        assert len(data["results"]) == 13

    def test_rejects_zero_trials(self, runner):
        result = runner.invoke(app, ["property-suite", "--trials", "0"])
        assert result.exit_code == 2

    @patch("octoeigen.cli.main.run_property_suite")
    def test_failure_exit_code(self, mock_run, runner):
        mock_run.return_value = PropertyReport(
            table_convention="t",
            seed=0,
            trials=1,
            results=[IdentityResult(name="algebra.norm_product", max_deviation=1.0, tolerance=1e-12, samples=1, passed=False)],
        )
        result = runner.invoke(app, ["property-suite", "--format", "text"])
        assert result.exit_code == 1
        assert "algebra.norm_product" in result.stdout
