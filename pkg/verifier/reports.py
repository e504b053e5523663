"""
Text reports and the discrepancy ledger.

Everything here is deterministic: outcomes keep campaign order, ledger
lines are sorted, and runtimes are left out unless asked for.
"""

import logging
from pathlib import Path
from typing import Iterable, List, Union

from structures import CheckReport

from .campaign import CampaignReport, LedgerEntry

logger = logging.getLogger(__name__)

LEDGER_FILE = "discrepancies.txt"


def _support(entry) -> str:
    points = entry.residual.support()
    shown = ",".join("(" + ",".join(str(i) for i in point) + ")" for point in points[:4])
    return shown + (",..." if len(points) > 4 else "")


def format_check_report(report: CheckReport, subject: str = "") -> str:
    """
    One line per axiom: id, role, verdict, first failing basis vector and
    the support of the residual.
    """
    lines = [f"check {subject or report.subject}"]
    for entry in report.entries:
        verdict = "pass" if entry.passed else "FAIL"
        line = f"  {entry.axiom_id:<20} {entry.role.value:<8} {verdict}"
        if not entry.passed:
            line += f"  first_failing=e{entry.first_failing_basis_index}  support={_support(entry)}"
        lines.append(line)
    lines.append(f"required {'pass' if report.passed else 'FAIL'}; "
                 f"multiplicative {'yes' if report.multiplicative else 'no'}")
    return "\n".join(lines) + "\n"


def _failure_text(failures) -> str:
    return ", ".join(
        f"{axiom}@e{index}" if index is not None else axiom for axiom, index in sorted(failures.items())
    )


def emit_report(report: CampaignReport, include_runtime: bool = False) -> str:
    """
    Campaign report text.

    The header names the theorem and the run parameters; each witness gets
    one line, with failing variants, axiom ids and first failing basis
    indices. A campaign with no outcomes prints the header alone.
    """
    lines = [
        f"theorem {report.theorem}",
        f"statement {report.statement}",
        f"hypothesis {report.hypothesis} -> conclusion {report.conclusion} via {report.rule}",
        f"field {report.field} dim {report.dim} seed {report.seed} epsilon {report.epsilon.value}",
    ]
    if report.report_only:
        lines.append(f"report-only: {report.reason}")
    if include_runtime:
        lines.append(f"runtime {report.runtime_seconds:.2f}s")
    if not report.outcomes:
        return "\n".join(lines) + "\n"

    lines.append(f"witnesses {report.witnesses} passed {report.passed} failed {report.failed}")
    for outcome in report.outcomes:
        verdict = "pass" if outcome.passed else "FAIL"
        lines.append(f"  {verdict} {outcome.witness} [{outcome.source}]")
        for variant, failures in sorted(outcome.failures.items()):
            lines.append(f"       {variant}: {_failure_text(failures)}")
        if "error" in outcome.details:
            lines.append(f"       construction raised {outcome.details['error']}")
    for counterexample in report.counterexamples:
        lines.append(f"counterexample {counterexample.name}.hcs")
    if report.report_only:
        verdict = "holds on every witness" if not report.failed else f"fails on {report.failed} witnesses"
    else:
        verdict = "REFUTED" if report.refuted else "confirmed"
    lines.append(f"verdict {verdict}")
    return "\n".join(lines) + "\n"


def ledger_lines(entries: Iterable[Union[LedgerEntry, CampaignReport]]) -> List[str]:
    """Sorted ``<theorem> <witness> key=value ...`` lines."""
    flat: List[LedgerEntry] = []
    for item in entries:
        flat.extend(item.ledger if isinstance(item, CampaignReport) else [item])
    return sorted(entry.line() for entry in flat)


def write_ledger(path: Union[str, Path], reports: Iterable[CampaignReport]) -> Path:
    """
    Write the discrepancy ledger.

    ``path`` may name the file or the directory that receives ``discrepancies.txt``.
    """
    path = Path(path)
    if path.is_dir() or not path.suffix:
        path = path / LEDGER_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ledger_lines(reports)
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8", newline="\n")
    logger.info(f"Wrote {len(lines)} ledger lines to {path}")
    return path


def write_counterexamples(directory: Union[str, Path], report: CampaignReport) -> List[Path]:
    """One ``.hcs`` file per counterexample."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for counterexample in report.counterexamples:
        path = directory / f"{counterexample.name}.hcs"
        path.write_text(counterexample.text, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def summary_table(reports: Iterable[CampaignReport]) -> str:
    """One row per campaign: id, pass/total, verdict."""
    rows = ["theorem              passed   verdict"]
    for report in sorted(reports, key=lambda r: r.theorem):
        if report.report_only:
            verdict = "report-only"
        else:
            verdict = "REFUTED" if report.refuted else "confirmed"
        rows.append(f"{report.theorem:<20} {report.passed:>3}/{report.witnesses:<4} {verdict}")
    return "\n".join(rows) + "\n"
