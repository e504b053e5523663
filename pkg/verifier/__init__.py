"""
Structure files, theorem campaigns, reports and the command line.

Usage:
    from verifier import load_structure_file, verify_theorem, emit_report

    package = load_structure_file("dual_numbers.hcs")
    report = verify_theorem("T-am1", trials=10, field="F5")
    print(emit_report(report))
"""

from .campaign import (
    CampaignReport,
    Counterexample,
    LedgerEntry,
    TrialOutcome,
    Witness,
    WitnessPools,
    verify_all,
    verify_theorem,
)
from .config import EngineConfig, create_config_for_profile, get_ci_config, get_development_config, get_testing_config
from .errors import (
    CampaignError,
    DimMismatch,
    FormatSyntaxError,
    NonPrimeModulus,
    NoWitnessesFound,
    StructureFileError,
    UnknownKind,
    UnknownTheorem,
)
from .file_format import (
    ALGEBRA_KIND,
    FILE_SUFFIX,
    canonical_key,
    emit_structure_file,
    load_structure_file,
    parse_structure_file,
    write_structure_file,
)
from .reports import emit_report, format_check_report, ledger_lines, write_ledger
from .theorems import THEOREMS, Theorem, get_theorem, theorem_ids

__all__ = [
    "parse_structure_file",
    "emit_structure_file",
    "load_structure_file",
    "write_structure_file",
    "canonical_key",
    "FILE_SUFFIX",
    "ALGEBRA_KIND",
    "EngineConfig",
    "create_config_for_profile",
    "get_development_config",
    "get_ci_config",
    "get_testing_config",
    "Theorem",
    "THEOREMS",
    "get_theorem",
    "theorem_ids",
    "verify_theorem",
    "verify_all",
    "Witness",
    "WitnessPools",
    "CampaignReport",
    "TrialOutcome",
    "Counterexample",
    "LedgerEntry",
    "emit_report",
    "format_check_report",
    "ledger_lines",
    "write_ledger",
    "StructureFileError",
    "FormatSyntaxError",
    "DimMismatch",
    "UnknownKind",
    "NonPrimeModulus",
    "CampaignError",
    "UnknownTheorem",
    "NoWitnessesFound",
]
