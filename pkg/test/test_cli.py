"""
Tests for the command-line interface and its exit codes.
"""

import json

import pytest
from click.testing import CliRunner

from verifier import emit_structure_file, load_structure_file
from verifier.cli import EXIT_FAILED, EXIT_INPUT, EXIT_NO_WITNESSES, EXIT_OK, cli

NON_COASSOCIATIVE = """\
kind = HomCoassoc
field = Q
dim C = 2
comap delta C -> (C, C) {
  e1 -> 1 (e1, e1) + 1 (e2, e2)
  e2 -> 0
}
"""


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def fixture_path(fixtures_dir):
    """Path of a fixture file by stem, as a string for click."""
    return lambda stem: str(fixtures_dir / f"{stem}.hcs")


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.hcs"
    path.write_text(NON_COASSOCIATIVE, encoding="utf-8")
    return str(path)


def invoke(runner, *args):
    return runner.invoke(cli, ["--profile", "testing", *args])


@pytest.mark.cli
class TestCheckCommand:
    """Test the check command."""

    def test_passing_fixture(self, runner, fixture_path):
        """Test exit 0 and the summary line on a valid package."""
        result = invoke(runner, "check", fixture_path("homlie_q"))
        assert result.exit_code == EXIT_OK, result.output
        assert "required pass" in result.output

    def test_failing_package(self, runner, bad_file):
        """Test exit 1 and the failing axiom on a non-coassociative package."""
        result = invoke(runner, "check", bad_file)
        assert result.exit_code == EXIT_FAILED
        assert "first_failing=e1" in result.output

    def test_json_output(self, runner, bad_file):
        """Test the JSON rendering of a report."""
        result = invoke(runner, "check", "--json", bad_file)
        data = json.loads(result.output)
        assert data["passed"] is False

    def test_malformed_file(self, runner, tmp_path):
        """Test exit 2 on a parse error."""
        path = tmp_path / "broken.hcs"
        path.write_text("kind = HomCoassoc\nfield = Fp 4\n", encoding="utf-8")
        result = invoke(runner, "check", str(path))
        assert result.exit_code == EXIT_INPUT
        assert "error:" in result.output

    def test_invalid_utf8(self, runner, tmp_path):
        """Test exit 2 with the line and column of a byte outside UTF-8."""
        path = tmp_path / "latin1.hcs"
        path.write_bytes(b"kind = HomCoassoc\nfield = Q\xe9\n")
        result = invoke(runner, "check", str(path))
        assert result.exit_code == EXIT_INPUT
        assert "line 2, column 10" in result.output

    def test_unknown_axiom(self, runner, fixture_path):
        """Test exit 2 on an axiom the kind does not have."""
        result = invoke(runner, "check", "--axioms", "coasso", fixture_path("homlie_q"))
        assert result.exit_code == EXIT_INPUT


@pytest.mark.cli
class TestConstructCommand:
    """Test the construct command."""

    def test_yau_twist_to_file(self, runner, fixture_path, tmp_path, load_fixture):
        """Test that the twisted package is written and passes."""
        out = tmp_path / "twisted.hcs"
        result = invoke(runner, "construct", "yau_twist", fixture_path("dual_numbers_q"),
                        "--param", "beta=diag:1,2", "-o", str(out))
        assert result.exit_code == EXIT_OK, result.output
        assert load_structure_file(out) == load_fixture("dual_numbers_twisted_q")

    def test_construct_to_stdout(self, runner, fixture_path, load_fixture):
        """Test that the canonical text goes to stdout."""
        result = invoke(runner, "construct", "commutator_cobracket", fixture_path("coassoc_upper_q"))
        assert result.exit_code == EXIT_OK
        assert "kind = HomLie" in result.output

    def test_regular_comodule(self, runner, fixture_path, load_fixture):
        """Test a comodule rule on a base coalgebra."""
        result = invoke(runner, "construct", "regular_k", fixture_path("posthomlie_bracket_q"))
        assert result.exit_code == EXIT_OK
        assert emit_structure_file(load_fixture("posthomlie_regular_comodule_q")) in result.output

    def test_unknown_rule(self, runner, fixture_path):
        """Test exit 2 on an unknown rule."""
        result = invoke(runner, "construct", "no_such_rule", fixture_path("dual_numbers_q"))
        assert result.exit_code == EXIT_INPUT

    def test_bad_parameter(self, runner, fixture_path):
        """Test exit 2 on a malformed key=value pair."""
        result = invoke(runner, "construct", "yau_twist", fixture_path("dual_numbers_q"), "--param", "beta")
        assert result.exit_code == 2


@pytest.mark.cli
class TestOtherCommands:
    """Test search, listing, duality, oracle and minimize commands."""

    def test_exhaustive_search(self, runner):
        """Test the witness count of a tiny exhaustive search."""
        result = invoke(runner, "search", "HomCoassoc", "--dim", "1", "--field", "F3", "--mode", "exhaustive")
        assert result.exit_code == EXIT_OK
        assert "2 witnesses from 3/3 candidates" in result.output
        assert "HomCoassoc-d1-F3-42-1" in result.output

    def test_search_guard(self, runner):
        """Test exit 2 when exhaustive search over Q is requested."""
        result = invoke(runner, "search", "HomCoassoc", "--dim", "1", "--field", "Q", "--mode", "exhaustive")
        assert result.exit_code == EXIT_INPUT

    def test_search_bad_field(self, runner):
        """Test exit 2 on an invalid field."""
        result = invoke(runner, "search", "HomLie", "--field", "Fp 4")
        assert result.exit_code == EXIT_INPUT

    def test_theorems(self, runner):
        """Test the registry listing."""
        result = invoke(runner, "theorems")
        assert "T-am1" in result.output
        assert "[report-only]" in result.output

    def test_rules(self, runner):
        """Test the rule listing covers both registries."""
        result = invoke(runner, "rules")
        assert "yau_twist" in result.output
        assert "twist_beta" in result.output

    def test_dualize(self, runner, fixture_path):
        """Test algebra to coalgebra duality."""
        result = invoke(runner, "dualize", fixture_path("tridend_algebra_q"))
        assert result.exit_code == EXIT_OK
        assert "kind = HomTridendriform" in result.output

    def test_dualize_wrong_kind(self, runner, fixture_path):
        """Test that other kinds are refused."""
        result = invoke(runner, "dualize", fixture_path("dual_numbers_q"))
        assert result.exit_code == 2

    def test_oracle(self, runner, fixture_path):
        """Test that the oracle and checker agree on a passing axiom."""
        result = invoke(runner, "oracle", fixture_path("dual_numbers_q"), "--axiom", "coasso")
        assert result.exit_code == EXIT_OK
        assert "oracle pass" in result.output

    def test_minimize_keeps_failing_axiom(self, runner, bad_file):
        """Test that a minimal failing package is left as it is."""
        result = invoke(runner, "minimize", bad_file, "--axiom", "coasso")
        assert result.exit_code == EXIT_OK
        assert "nonzero coefficients 4 -> 4" in result.output

    def test_config_help(self, runner):
        """Test that the configuration fields are listed."""
        result = invoke(runner, "config")
        assert "search_budget" in result.output


@pytest.mark.cli
@pytest.mark.integration
class TestVerifyTheoremCommand:
    """Test campaigns from the command line."""

    def test_confirmed_theorem(self, runner, tmp_path):
        """Test a small confirmed campaign."""
        result = invoke(runner, "verify-theorem", "T-am1", "--field", "Q", "--dim", "1", "--trials", "2",
                        "--out", str(tmp_path))
        assert result.exit_code == EXIT_OK, result.output
        assert "verdict confirmed" in result.output

    def test_refuted_theorem(self, runner, tmp_path, fake_theorems):
        """Test exit 1 and the written counterexamples of a refuted campaign."""
        result = invoke(runner, "verify-theorem", "T-fake", "--field", "Q", "--dim", "1", "--trials", "2",
                        "--out", str(tmp_path))
        assert result.exit_code == EXIT_FAILED, result.output
        assert "verdict REFUTED" in result.output
        assert list((tmp_path / "counterexamples").glob("*.hcs"))

    def test_theorem_without_witnesses(self, runner, tmp_path, fake_theorems):
        """Test exit 3 when no witness satisfies the hypotheses."""
        result = invoke(runner, "verify-theorem", "T-none", "--field", "Q", "--dim", "1", "--trials", "2",
                        "--out", str(tmp_path))
        assert result.exit_code == EXIT_NO_WITNESSES

    def test_same_seed_same_output(self, runner, tmp_path):
        """Test that two runs with one seed print the same report."""
        args = ("verify-theorem", "T-am1", "--field", "F5", "--dim", "1", "--trials", "3", "--seed", "7",
                "--out", str(tmp_path))
        first, second = invoke(runner, *args), invoke(runner, *args)
        assert first.exit_code == EXIT_OK
        assert first.stdout_bytes == second.stdout_bytes

    def test_unknown_theorem(self, runner, tmp_path):
        """Test exit 2 on an unknown id."""
        result = invoke(runner, "verify-theorem", "T-404", "--out", str(tmp_path))
        assert result.exit_code == EXIT_INPUT
