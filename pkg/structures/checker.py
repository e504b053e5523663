"""
Axiom checker for structure packages.
"""

import logging
from typing import Iterable, List, Optional

from tensorcore import TensorMap

from .axioms import AXIOM_TABLE, Terms, axiom_specs
from .errors import UnknownAxiom
from .schemas import AxiomEntry, CheckReport, EpsilonReading, StructureKind, StructurePackage

logger = logging.getLogger(__name__)


def axiom_ids(kind: StructureKind) -> List[str]:
    """Axiom ids checked for ``kind``, in report order."""
    return [spec.axiom_id for spec in AXIOM_TABLE[StructureKind(kind)]]


def _validate_ids(kind: StructureKind, requested: Iterable[str]) -> List[str]:
    requested = list(requested)
    known = set(axiom_ids(kind))
    unknown = [a for a in requested if a not in known]
    if unknown:
        raise UnknownAxiom(f"{kind.value} has no axioms {unknown}; known: {sorted(known)}")
    return requested


def check_structure(S: StructurePackage, axioms: Optional[Iterable[str]] = None,
                    epsilon: EpsilonReading = EpsilonReading.XI,
                    elide_alpha: bool = False) -> CheckReport:
    """
    Evaluate every axiom of ``S.kind`` (or the requested subset) as a residual.

    Args:
        S: Package to check
        axioms: Optional subset of axiom ids
        epsilon: Reading of ε, ε² in the post-Hom-Poisson identities
        elide_alpha: Skip every α-composition (classical check)

    Returns:
        CheckReport: One entry per axiom; ``passed`` covers required axioms,
        ``multiplicative`` the comultiplicativity entries

    Raises:
        UnknownAxiom: If a requested id is not defined for the kind
    """
    selected = None if axioms is None else _validate_ids(S.kind, axioms)
    terms = Terms(S.alpha, epsilon, elide_alpha)
    report = CheckReport(subject=S.kind.value)
    for spec in axiom_specs(S.kind, selected):
        residual = spec.build(S, terms)
        entry = AxiomEntry(spec.axiom_id, residual, spec.role, spec.multiplicativity)
        if not entry.passed:
            logger.debug(f"{S.kind.value}: {spec.axiom_id} fails at e{entry.first_failing_basis_index}")
        report.entries.append(entry)
    return report


def axiom_residual(S: StructurePackage, axiom_id: str,
                   epsilon: EpsilonReading = EpsilonReading.XI) -> TensorMap:
    """
    The residual tensor of one axiom.

    Raises:
        UnknownAxiom: If ``axiom_id`` is not defined for ``S.kind``
    """
    _validate_ids(S.kind, [axiom_id])
    spec = axiom_specs(S.kind, [axiom_id])[0]
    return spec.build(S, Terms(S.alpha, epsilon))


def passes(S: StructurePackage, require_multiplicative: bool = False,
           epsilon: EpsilonReading = EpsilonReading.XI) -> bool:
    """Shorthand verdict used by search and campaigns."""
    report = check_structure(S, epsilon=epsilon)
    return report.passed and (report.multiplicative or not require_multiplicative)
