"""
Coalgebraic structure packages and their axiom checker.

Usage:
    from structures import StructureKind, StructurePackage, check_structure

    report = check_structure(package)
    if not report.passed:
        print(report.failed_axioms)
"""

from .axioms import AXIOM_TABLE, AxiomSpec, Terms
from .checker import axiom_ids, axiom_residual, check_structure, passes
from .duality import (
    TridendriformAlgebra,
    check_algebra,
    classical_dual_package,
    codualize,
    dualize_algebra,
    opposite_tridend,
)
from .errors import AlgebraShapeError, KindMismatch, StructureError, UnknownAxiom
from .schemas import (
    RB_KINDS,
    REQUIRED_COMAPS,
    AxiomEntry,
    AxiomRole,
    CheckReport,
    EpsilonReading,
    RotaBaxter,
    StructureKind,
    StructurePackage,
)

__all__ = [
    "StructureKind",
    "StructurePackage",
    "RotaBaxter",
    "AxiomRole",
    "AxiomEntry",
    "CheckReport",
    "EpsilonReading",
    "REQUIRED_COMAPS",
    "RB_KINDS",
    "AXIOM_TABLE",
    "AxiomSpec",
    "Terms",
    "check_structure",
    "axiom_residual",
    "axiom_ids",
    "passes",
    "opposite_tridend",
    "dualize_algebra",
    "codualize",
    "check_algebra",
    "classical_dual_package",
    "TridendriformAlgebra",
    "StructureError",
    "KindMismatch",
    "UnknownAxiom",
    "AlgebraShapeError",
]
