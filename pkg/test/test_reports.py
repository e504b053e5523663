"""
Tests for campaign reports and the discrepancy ledger.
"""

import pytest

from structures import EpsilonReading, check_structure
from verifier import (
    CampaignReport,
    Counterexample,
    LedgerEntry,
    TrialOutcome,
    emit_report,
    ledger_lines,
    verify_theorem,
    write_ledger,
)
from verifier.reports import LEDGER_FILE, format_check_report, summary_table, write_counterexamples


def make_report(theorem="T-am1", report_only=False, outcomes=(), ledger=(), counterexamples=()) -> CampaignReport:
    return CampaignReport(
        theorem=theorem, statement="statement", hypothesis="HomCoassoc", conclusion="HomLie",
        rule="commutator_cobracket", report_only=report_only, reason="reason" if report_only else "",
        field="F5", dim=2, seed=42, epsilon=EpsilonReading.XI, trials_requested=3,
        outcomes=list(outcomes), ledger=list(ledger), counterexamples=list(counterexamples),
        runtime_seconds=1.5,
    )


PASSING = TrialOutcome(witness="w1", source="fixture", passed=True, variants={"commutator": True})
FAILING = TrialOutcome(witness="w2", passed=False, variants={"commutator": False},
                       failures={"commutator": {"cojacobi": 2, "skew": None}})


@pytest.mark.unit
class TestEmitReport:
    """Test campaign report text."""

    def test_header_only_without_outcomes(self):
        """Test that an empty campaign prints only its header."""
        text = emit_report(make_report())
        assert text.splitlines() == [
            "theorem T-am1",
            "statement statement",
            "hypothesis HomCoassoc -> conclusion HomLie via commutator_cobracket",
            "field F5 dim 2 seed 42 epsilon xi",
        ]

    def test_failures_and_verdict(self):
        """Test witness lines, failing axioms and the refutation verdict."""
        counterexample = Counterexample(name="T-am1-w2", witness="w2", variants=["commutator"], text="")
        text = emit_report(make_report(outcomes=[PASSING, FAILING], counterexamples=[counterexample]))
        assert "witnesses 2 passed 1 failed 1" in text
        assert "  pass w1 [fixture]" in text
        assert "commutator: cojacobi@e2, skew" in text
        assert "counterexample T-am1-w2.hcs" in text
        assert text.endswith("verdict REFUTED\n")

    def test_report_only_verdict(self):
        """Test that report-only campaigns never print REFUTED."""
        text = emit_report(make_report(report_only=True, outcomes=[FAILING]))
        assert "report-only: reason" in text
        assert "verdict fails on 1 witnesses" in text
        assert "REFUTED" not in text

    def test_runtime_is_optional(self):
        """Test that runtimes only appear on request."""
        report = make_report(outcomes=[PASSING])
        assert "runtime" not in emit_report(report)
        assert "runtime 1.50s" in emit_report(report, include_runtime=True)
        assert emit_report(report) == emit_report(report)

    def test_summary_table(self):
        """Test one row per campaign sorted by id."""
        table = summary_table([make_report("T-op", outcomes=[PASSING]),
                               make_report("L-le1", report_only=True, outcomes=[FAILING])])
        rows = table.splitlines()
        assert rows[1].startswith("L-le1")
        assert rows[1].endswith("report-only")
        assert rows[2].endswith("confirmed")


@pytest.mark.unit
class TestLedger:
    """Test ledger lines and files."""

    def test_lines_are_sorted(self):
        """Test that entries from several reports are merged and sorted."""
        first = LedgerEntry(theorem="T-op", witness="b", values={"pass": "false"})
        second = LedgerEntry(theorem="L-le1", witness="a", values={"L=R1": "true", "L=R2": "false"})
        lines = ledger_lines([make_report("T-op", ledger=[first]), second])
        assert lines == ["L-le1 a L=R1=true L=R2=false", "T-op b pass=false"]

    def test_write_ledger_to_directory(self, tmp_path):
        """Test that a directory receives the default ledger file."""
        entry = LedgerEntry(theorem="L-le1", witness="a", values={"verdict": "R1"})
        path = write_ledger(tmp_path, [make_report("L-le1", report_only=True, ledger=[entry])])
        assert path == tmp_path / LEDGER_FILE
        assert path.read_text(encoding="utf-8") == "L-le1 a verdict=R1\n"

    def test_write_counterexamples(self, tmp_path):
        """Test one file per counterexample."""
        counterexample = Counterexample(name="T-am1-w2", witness="w2", text="kind = HomCoassoc\n")
        paths = write_counterexamples(tmp_path / "cx", make_report(counterexamples=[counterexample]))
        assert [p.name for p in paths] == ["T-am1-w2.hcs"]
        assert paths[0].read_text(encoding="utf-8") == "kind = HomCoassoc\n"


@pytest.mark.unit
class TestCheckReportText:
    """Test the per-axiom check listing."""

    def test_failing_axiom_line(self, factory, q):
        """Test that failing axioms show the first basis vector and the support."""
        S = factory.coassoc(q, 2, {1: [(1, (1, 1)), (1, (2, 2))]})
        text = format_check_report(check_structure(S), "bad")
        assert text.startswith("check bad\n")
        coasso = next(line for line in text.splitlines() if "coasso" in line)
        assert "FAIL" in coasso
        assert "first_failing=e1" in coasso
        assert text.endswith("required FAIL; multiplicative yes\n")


@pytest.mark.integration
class TestReproducibility:
    """Test that campaigns with equal seeds print equal reports."""

    def test_same_seed_same_bytes(self, engine):
        """Test two runs of one campaign over F5 with seed 7."""
        first, second = (verify_theorem("T-am1", trials=3, field="F5", dim=1, seed=7, engine=engine)
                         for _ in range(2))
        assert emit_report(first).encode("utf-8") == emit_report(second).encode("utf-8")
        assert ledger_lines([first]) == ledger_lines([second])
