"""
Witness search, minimization and the componentwise oracle.

Usage:
    from search import SearchConfig, SearchMode, enumerate_instances

    cfg = SearchConfig(kind="HomLie", dim=2, field="F3", mode=SearchMode.EXHAUSTIVE)
    for record in enumerate_instances(cfg):
        print(record.name, record.verdicts.passed)
"""

from .config import AlphaConstraint, SearchConfig, SearchMode
from .enumerate import (
    SearchResult,
    Slot,
    WitnessRecord,
    check_guards,
    enumerate_instances,
    exhaustive_size,
    full_report,
    quick_passes,
    random_raw_comodule,
    random_raw_package,
    structure_layout,
)
from .errors import BudgetExceeded, GuardViolation, SearchError
from .minimize import drop_basis_vector, minimize_witness, nonzero_positions, preserves_verdict
from .oracle import OracleResult, oracle_axiom_ids, sweedler_oracle_check

__all__ = [
    "SearchConfig",
    "SearchMode",
    "AlphaConstraint",
    "SearchResult",
    "Slot",
    "WitnessRecord",
    "enumerate_instances",
    "check_guards",
    "exhaustive_size",
    "structure_layout",
    "quick_passes",
    "full_report",
    "random_raw_package",
    "random_raw_comodule",
    "minimize_witness",
    "preserves_verdict",
    "drop_basis_vector",
    "nonzero_positions",
    "sweedler_oracle_check",
    "oracle_axiom_ids",
    "OracleResult",
    "SearchError",
    "GuardViolation",
    "BudgetExceeded",
]
