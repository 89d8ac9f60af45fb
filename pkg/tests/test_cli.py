"""Tests for the flagq command line."""

import json
from unittest.mock import patch

import pytest

from app.config import reset_settings
from app.fixtures import load_model_file
from app.main import main
from app.verify import CheckReport, CheckStatus, Witness


@pytest.fixture(autouse=True)
def _fresh_settings():
    reset_settings()
    yield
    reset_settings()


def structured(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


class TestGroebner:
    """Test the groebner verb."""

    def test_expect_so5(self, capsys):
        """Test that the so5 leading terms match the stored expectation."""
        assert main(["groebner", "--fixture", "so5", "--expect", "--format", "structured"]) == 0
        record = structured(capsys)
        assert record["command"] == "groebner"
        assert record["result"]["expected_match"] is True
        assert len(record["result"]["lt"]) == 6

    def test_expect_sl4(self, capsys):
        """Test that the sl4 leading terms match the stored twelve generators."""
        assert main(["groebner", "--fixture", "sl4", "--expect", "--format", "structured"]) == 0
        record = structured(capsys)
        assert record["result"]["expected_match"] is True
        assert len(record["result"]["lt"]) == 12

    def test_lt_only_fixture(self):
        """Test that a leading-terms-only fixture is a usage error."""
        assert main(["groebner", "--fixture", "so7"]) == 2

    def test_missing_fixture(self):
        """Test that an unknown fixture is a usage error."""
        assert main(["groebner", "--fixture", "e8"]) == 2


class TestHilbert:
    """Test the hilbert verb."""

    def test_sl3(self, capsys):
        """Test the structured series of sl3 at (1,1)."""
        args = ["hilbert", "--fixture", "sl3", "--M", "1,1", "--N", "3", "--format", "structured"]
        assert main(args) == 0
        record = structured(capsys)
        assert record["params"] == {"fixture": "sl3", "greedy": False, "M": [1, 1], "N": 3}
        series = record["result"]["series"]
        assert sum(entry["coeffs"][0] for entry in series) == 8
        assert all(len(entry["coeffs"]) == 4 for entry in series)

    def test_wrong_length(self):
        """Test that a multidegree of the wrong length is a usage error."""
        assert main(["hilbert", "--fixture", "sl3", "--M", "1"]) == 2

    def test_negative_multidegree(self):
        """Test that a negative multidegree is a usage error."""
        assert main(["hilbert", "--fixture", "sl3", "--M", "1,-1"]) == 2

    def test_output_independent_of_jobs(self, capsys):
        """Test that splitting the series across workers prints the same bytes."""
        args = ["hilbert", "--fixture", "sl3", "--M", "2,1", "--N", "4", "--format", "structured"]
        assert main([*args, "--jobs", "1"]) == 0
        serial = capsys.readouterr().out
        assert main([*args, "--jobs", "2"]) == 0
        assert capsys.readouterr().out == serial

    def test_dump_model(self, tmp_path):
        """Test that the quadratic model can be written alongside the series."""
        path = tmp_path / "model.json"
        assert main(["hilbert", "--fixture", "so5", "--M", "1,0", "--dump-model", str(path)]) == 0
        assert ("t", "xmm") in load_model_file(path).pair_names()

    def test_source_required(self):
        """Test that a fixture or a model file must be named."""
        assert main(["hilbert", "--M", "1,1"]) == 2


class TestHL:
    """Test the hl verb."""

    def test_sl2(self, capsys):
        """Test the structured table for sl2, lambda = 2."""
        assert main(["hl", "--algebra", "sl2", "--lambda", "2", "--format", "structured"]) == 0
        assert structured(capsys)["result"] == [
            {"mu": [0], "poly": [0, 1]},
            {"mu": [2], "poly": [1]},
        ]

    def test_inner_fundamental(self):
        """Test that an unsupported B-series weight is a computation error."""
        assert main(["hl", "--algebra", "so7", "--lambda", "0,1,0"]) == 3

    def test_unknown_algebra(self):
        """Test that an unknown algebra is a usage error."""
        assert main(["hl", "--algebra", "e6", "--lambda", "1"]) == 2


class TestCheck:
    """Test the check verb."""

    def test_single_identity(self, capsys):
        """Test one explicit identity check."""
        args = ["check", "id35", "--M1", "1", "--M2", "1", "--N", "8", "--format", "structured"]
        assert main(args) == 0
        record = structured(capsys)
        assert record["params"] == {"selector": "id35", "M1": 1, "M2": 1, "N": 8}
        assert record["result"] == [
            {"check": "id35", "params": {"M1": 1, "M2": 1}, "N": 8, "status": "pass"}
        ]

    def test_selector_grid(self, capsys):
        """Test running every dimension check of the acceptance grid."""
        assert main(["check", "dim243"]) == 0
        assert capsys.readouterr().out.strip().endswith("36 passed, 0 failed")

    def test_missing_parameter(self):
        """Test that an incomplete explicit check is a usage error."""
        assert main(["check", "id35", "--M1", "1"]) == 2

    def test_not_claimed(self):
        """Test that a manifest outside its range is a usage error."""
        assert main(["check", "manifest", "--case", "so5", "--M", "1,2"]) == 2

    def test_unknown_selector(self):
        """Test that argparse rejects unknown selectors."""
        assert main(["check", "id99"]) == 2

    def test_negative_order(self):
        """Test that an out-of-range flag is a usage error."""
        assert main(["check", "id35", "--M1", "1", "--M2", "1", "--N", "-1"]) == 2

    def test_output_independent_of_jobs(self, capsys):
        """Test that a parallel grid run prints the same bytes as a serial one."""
        args = ["check", "id35", "--N", "6", "--format", "structured"]
        assert main([*args, "--jobs", "1"]) == 0
        serial = capsys.readouterr().out
        assert main([*args, "--jobs", "2"]) == 0
        assert capsys.readouterr().out == serial
        assert len(json.loads(serial)["result"]) == 36

    def test_help_documents_shared_order(self, capsys):
        """Test that the help text says --N sets both grid orders."""
        assert main(["check", "--help"]) == 0
        text = " ".join(capsys.readouterr().out.split())
        assert "--N sets both the identity order" in text
        assert "the conjecture order" in text

    @patch("app.cli.commands.run_checks")
    def test_failure_exit_code(self, mock_run_checks, capsys):
        """Test that a failing check sets exit status 1 and prints its witness."""
        mock_run_checks.return_value = [
            CheckReport(
                check="id35",
                params={"M1": 1, "M2": 1},
                order=4,
                status=CheckStatus.FAIL,
                witness=Witness(power=2, lhs=1, rhs=0),
            )
        ]
        assert main(["check", "id35", "--M1", "1", "--M2", "1", "--N", "4"]) == 1
        out = capsys.readouterr().out
        assert "FAIL id35 M1=1 M2=1 N=4 | q^2: 1 != 0" in out
        assert "0 passed, 1 failed" in out


def test_fixtures_list(capsys):
    """Test listing the fixture corpus."""
    assert main(["fixtures", "list", "--format", "structured"]) == 0
    records = structured(capsys)["result"]
    assert [r["name"] for r in records] == ["sl2", "sl3", "sl4", "so5", "so7"]
    assert {r["name"]: r["resolution"] for r in records}["so5"] is True
