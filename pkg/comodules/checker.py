"""
Comodule axioms as residual tensors.

All structure maps have codomain (L, M). Compositions are written with the
base map on the L leg and α_M or a structure map on the M leg, so every
residual has codomain (L, L, M).
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

from structures import AxiomEntry, AxiomRole, CheckReport, UnknownAxiom
from tensorcore import TAU_I, TensorMap, add, compose_pair, lincomb, permute, precompose, sub

from .schemas import ComoduleKind, ComodulePackage

logger = logging.getLogger(__name__)

ComoduleBuilder = Callable[[ComodulePackage], TensorMap]


@dataclass(frozen=True)
class ComoduleAxiom:
    axiom_id: str
    build: ComoduleBuilder
    role: AxiomRole = AxiomRole.REQUIRED
    multiplicativity: bool = False


# -- tridendriform comodules ----------------------------------------------

def _tridend(Cm: ComodulePackage):
    base = Cm.base
    return (base.alpha, Cm.alpha_m,
            base.comap("delta_m1"), base.comap("delta_0"), base.comap("delta_1"),
            Cm.structure_map("dm1"), Cm.structure_map("d0"), Cm.structure_map("d1"))


def _cc1(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(dm1, am, mm1), compose_pair(a, add(mm1, m0, m1), mm1))


def _cc2(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(d1, am, mm1), compose_pair(a, mm1, m1))


def _cc3(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(a, m1, m1), compose_pair(add(dm1, d1, d0), am, m1))


def _cc4(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(dm1, am, m0), compose_pair(a, m1, m0))


def _cc5(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(d1, am, m0), compose_pair(a, m0, m1))


def _cc6(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(d0, am, mm1), compose_pair(a, mm1, m0))


def _cc7(Cm):
    a, am, dm1, d0, d1, mm1, m0, m1 = _tridend(Cm)
    return sub(compose_pair(d0, am, m0), compose_pair(a, m0, m0))


# -- post-Hom-Lie comodules -----------------------------------------------

def _post(Cm: ComodulePackage):
    base = Cm.base
    return (base.alpha, Cm.alpha_m, base.comap("gamma"), base.comap("delta"),
            Cm.structure_map("diamond"), Cm.structure_map("bullet"))


def _ma1(name: str) -> ComoduleBuilder:
    def build(Cm: ComodulePackage) -> TensorMap:
        m = Cm.structure_map(name)
        return sub(precompose(m, Cm.alpha_m), compose_pair(Cm.base.alpha, Cm.alpha_m, m))
    return build


def _ma2(Cm):
    a, am, g, d, dia, bul = _post(Cm)
    inner = compose_pair(a, dia, dia)
    return lincomb([(1, compose_pair(g, am, dia)), (-1, inner), (1, permute(TAU_I, inner))])


def _ma3(Cm):
    a, am, g, d, dia, bul = _post(Cm)
    return lincomb([(1, compose_pair(d, am, dia)),
                    (-1, compose_pair(a, dia, bul)),
                    (1, permute(TAU_I, compose_pair(a, bul, dia)))])


def _ma3_printed(Cm):
    a, am, g, d, dia, bul = _post(Cm)
    return lincomb([(1, compose_pair(d, am, dia)),
                    (-1, compose_pair(a, dia, bul)),
                    (1, permute(TAU_I, compose_pair(a, bul, bul)))])


def _ma4(Cm):
    a, am, g, d, dia, bul = _post(Cm)
    ab = compose_pair(a, bul, bul)
    da = compose_pair(d, am, bul)
    return lincomb([(1, compose_pair(g, am, bul)),
                    (-1, ab), (1, permute(TAU_I, ab)),
                    (-1, permute(TAU_I, da)), (1, da)])


COMODULE_AXIOMS: Dict[ComoduleKind, tuple[ComoduleAxiom, ...]] = {
    ComoduleKind.TRIDEND: (
        ComoduleAxiom("cc1", _cc1),
        ComoduleAxiom("cc2", _cc2),
        ComoduleAxiom("cc3", _cc3),
        ComoduleAxiom("cc4", _cc4),
        ComoduleAxiom("cc5", _cc5),
        ComoduleAxiom("cc6", _cc6),
        ComoduleAxiom("cc7", _cc7),
    ),
    ComoduleKind.POST_HOM_LIE: (
        ComoduleAxiom("ma1-diamond", _ma1("diamond"), multiplicativity=True),
        ComoduleAxiom("ma1-bullet", _ma1("bullet"), multiplicativity=True),
        ComoduleAxiom("ma2", _ma2),
        ComoduleAxiom("ma3", _ma3),
        ComoduleAxiom("ma4", _ma4),
        ComoduleAxiom("ma3-printed", _ma3_printed, AxiomRole.REPORT_ONLY),
    ),
}

LEG_ORDER_NOTES: Dict[ComoduleKind, tuple[str, ...]] = {
    ComoduleKind.TRIDEND: (
        "structure maps typed M -> (C, M)",
    ),
    ComoduleKind.POST_HOM_LIE: (
        "structure maps typed M -> (L, M)",
        "ma1 evaluated as (alpha⊗alpha_M)∘Δ with the alpha factor on the L leg",
        "ma3 evaluated with (tau⊗Id_M)∘(alpha⊗Δ•)∘Δ⋄; the printed last factor Δ• is ma3-printed",
    ),
}


def comodule_axiom_ids(kind: ComoduleKind) -> List[str]:
    return [axiom.axiom_id for axiom in COMODULE_AXIOMS[ComoduleKind(kind)]]


def _select(kind: ComoduleKind, axioms: Optional[Iterable[str]]) -> tuple[ComoduleAxiom, ...]:
    table = COMODULE_AXIOMS[kind]
    if axioms is None:
        return table
    requested = list(axioms)
    known = {axiom.axiom_id for axiom in table}
    unknown = [a for a in requested if a not in known]
    if unknown:
        raise UnknownAxiom(f"{kind.value} has no axioms {unknown}; known: {sorted(known)}")
    return tuple(axiom for axiom in table if axiom.axiom_id in requested)


def check_comodule(Cm: ComodulePackage, axioms: Optional[Iterable[str]] = None) -> CheckReport:
    """
    Evaluate the comodule axioms of ``Cm`` as residuals.

    The report notes record how printed compositions were reordered to the
    (L, M) leg convention.

    Raises:
        UnknownAxiom: If a requested id is not defined for the comodule kind
    """
    report = CheckReport(subject=Cm.kind.value, notes=list(LEG_ORDER_NOTES[Cm.kind]))
    for axiom in _select(Cm.kind, axioms):
        entry = AxiomEntry(axiom.axiom_id, axiom.build(Cm), axiom.role, axiom.multiplicativity)
        if not entry.passed:
            logger.debug(f"{Cm.kind.value}: {axiom.axiom_id} fails at e{entry.first_failing_basis_index}")
        report.entries.append(entry)
    return report


def comodule_axiom_residual(Cm: ComodulePackage, axiom_id: str) -> TensorMap:
    (axiom,) = _select(Cm.kind, [axiom_id])
    return axiom.build(Cm)
