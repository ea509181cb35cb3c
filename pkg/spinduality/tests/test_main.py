"""
Tests for the command-line entry point.

This module runs main() in-process with reduced settings and checks the
printed reports and the exit codes.
"""

import json
from unittest.mock import patch

import pytest

from spinduality import main as cli
from spinduality.services import sergeev_algebra


@pytest.fixture
def run_cli(test_settings, tmp_cache_dir, capsys):
    """Run main() with testing settings; returns (exit code, stdout, stderr)."""

    def _run(*argv):
        args = list(argv)
        if args and args[0] in ("chartable", "presentation", "duality", "verify-all"):
            args += ["--cache-dir", str(tmp_cache_dir)]
        with patch.object(cli, "get_settings", return_value=test_settings):
            code = cli.main(args)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.mark.cli
class TestChartable:
    """Test cases for the chartable command."""

    def test_grid(self, run_cli, tmp_cache_dir):
        """Test the phi grid for k = 3 and its cache file."""
        code, out, _ = run_cli("chartable", "--k", "3")
        assert code == 0
        assert out.splitlines()[0].split() == ["phi", "k=3", "(3)", "(1,1,1)"]
        assert (tmp_cache_dir / "phi_k3.txt").exists()

    def test_records(self, run_cli):
        """Test the record output of a psi table."""
        code, out, _ = run_cli(
            "chartable", "--k", "2", "--kind", "psi", "--format", "records"
        )
        assert code == 0
        assert out.strip() == "2;psi;(2);(1,1);4/1 + 0/1*i + 0/1*r2 + 0/1*ir2"

    def test_zero_k_is_usage_error(self, run_cli):
        """Test that chartable needs k >= 1."""
        code, _, err = run_cli("chartable", "--k", "0")
        assert code == 2
        assert "invalid options" in err


@pytest.mark.cli
class TestVerificationCommands:
    """Test cases for presentation, duality and verify-all."""

    def test_presentation(self, run_cli):
        """Test the presentation report for k = 3."""
        code, out, _ = run_cli("presentation", "--k", "3")
        assert code == 0
        assert out.startswith("# spinduality presentation seed=")
        assert "CHECK theta-isomorphism k=3 PASS" in out
        assert "CHECK gamma-subalgebra-dim k=3 PASS" in out
        assert out.splitlines()[-1].endswith("failed=0")

    def test_presentation_quartic_relation(self, run_cli):
        """Test that k = 2 reports the quartic relation."""
        code, out, _ = run_cli("presentation", "--k", "2")
        assert code == 0
        assert "CHECK (tau*sigma1)^4=-1 k=2 PASS" in out

    def test_duality(self, run_cli):
        """Test a full duality run for n = 1, k = 2 in records format."""
        code, out, _ = run_cli("duality", "--n", "1", "--k", "2", "--format", "records")
        assert code == 0
        payload = json.loads(out)
        assert payload["command"] == "duality"
        assert payload["failed"] == 0
        names = {check["name"] for check in payload["checks"]}
        assert "supercentralizer(theta)=closure(psi)" in names
        assert "sergeev-vanishing" in names

    @pytest.mark.slow
    def test_duality_largest_default(self, run_cli):
        """Test the n = 2, k = 3 pipeline."""
        code, out, _ = run_cli("duality", "--n", "2", "--k", "3")
        assert code == 0
        assert out.splitlines()[-1].endswith("failed=0")

    def test_resource_guard(self, run_cli):
        """Test that an oversized tensor space needs --force."""
        code, _, err = run_cli("duality", "--n", "3", "--k", "5")
        assert code == 2
        assert "max_tensor_dim" in err

    def test_verify_all_empty(self, run_cli):
        """Test that k = 0 selects no checks and still succeeds."""
        code, out, _ = run_cli("verify-all", "--k", "0")
        assert code == 0
        assert "0 checks" in out.splitlines()
        assert out.splitlines()[-1] == "SUMMARY checks=0 passed=0 failed=0"

    @pytest.mark.slow
    def test_verify_all(self, run_cli):
        """Test the reduced acceptance sweep."""
        code, out, _ = run_cli("verify-all", "--k", "2", "--n", "1")
        assert code == 0
        assert "CHECK strict-odd-equinumerous" in out
        assert "n=1 k=2" in out

    def test_verify_all_detects_fault(self, run_cli, monkeypatch):
        """Test that a broken reordering sign fails the sweep."""
        monkeypatch.setattr(sergeev_algebra, "_clifford_sign", lambda subset, j: 1)
        code, out, _ = run_cli("verify-all", "--k", "2", "--n", "1", "--fail-fast")
        assert code == 1
        assert " FAIL" in out


@pytest.mark.cli
class TestArguments:
    """Test cases for argument parsing."""

    def test_unknown_command(self, run_cli):
        """Test that an unknown sub-command is a usage error."""
        code, _, _ = run_cli("frobnicate")
        assert code == 2

    def test_help(self, run_cli):
        """Test that --help exits cleanly."""
        code, out, _ = run_cli("--help")
        assert code == 0
        assert "verify-all" in out

    def test_version(self, run_cli):
        """Test the version flag."""
        code, out, _ = run_cli("--version")
        assert code == 0
        assert "spinduality" in out
