"""
Constructions on post-Hom-Lie coalgebras.

Covers the tilde involution, the admissible comultiplication Δ + ½γ with
its associator report, the structure induced by a Rota-Baxter operator on
a Hom-Lie coalgebra, and the tensor product with a cocommutative
Hom-coassociative coalgebra.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Union

from structures import KindMismatch, StructureKind, StructurePackage, check_structure
from tensorcore import (
    TAU,
    TAU_I,
    XI,
    XI2,
    TensorMap,
    add,
    compose_pair,
    identity,
    kron,
    lincomb,
    permute,
    product_space,
    sub,
)

from .derived import commutator, derived_package, require_kind
from .errors import NotCocommutative

logger = logging.getLogger(__name__)


class PostHomLieTarget(str, Enum):
    TILDE = "tilde"
    ADMISSIBLE = "admissible"
    LE1_REPORT = "le1_report"
    SUB_HOMLIE = "sub_homlie"


@dataclass
class Le1Report:
    """
    Associator identity of Δ̃ = Δ + ½γ against its two candidate right sides.

    ``lhs`` is as_Δ̃ − (τ⊗I)∘as_Δ̃ with as_Δ̃ = (Δ̃⊗α)∘Δ̃ − (α⊗Δ̃)∘Δ̃;
    ``rhs_half`` is −½(τ⊗I)∘(γ⊗α)∘γ and ``rhs_quarter`` is −¼(α⊗γ)∘γ.
    """

    lhs: TensorMap
    rhs_half: TensorMap
    rhs_quarter: TensorMap
    cyclic_sum: TensorMap
    admissible: bool

    @property
    def matches_half(self) -> bool:
        return self.lhs == self.rhs_half

    @property
    def matches_quarter(self) -> bool:
        return self.lhs == self.rhs_quarter

    @property
    def cyclic_sum_vanishes(self) -> bool:
        return self.cyclic_sum.is_zero()

    @property
    def verdict(self) -> str:
        if self.matches_half and self.matches_quarter:
            return "both"
        if self.matches_half:
            return "R1"
        if self.matches_quarter:
            return "R2"
        return "neither"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "L=R1": self.matches_half,
            "L=R2": self.matches_quarter,
            "cyclic": self.cyclic_sum_vanishes,
            "admissible": self.admissible,
            "verdict": self.verdict,
        }


def tilde(P: StructurePackage) -> StructurePackage:
    """PostHomLie package (Δ + γ, −γ, α)."""
    require_kind(P, StructureKind.POST_HOM_LIE, operation="tilde")
    gamma, delta = P.comap("gamma"), P.comap("delta")
    return P.with_maps(delta=add(delta, gamma), gamma=lincomb([(-1, gamma)]))


def admissible_comultiplication(P: StructurePackage) -> TensorMap:
    """
    Δ̃ = Δ + ½γ.

    Raises:
        CharacteristicConflict: In characteristic 2
    """
    require_kind(P, StructureKind.POST_HOM_LIE, operation="admissible_comultiplication")
    half = P.field.half()
    return lincomb([(1, P.comap("delta")), (half, P.comap("gamma"))])


def admissible(P: StructurePackage) -> StructurePackage:
    """HomLie candidate (1−τ)∘Δ̃ carried by the admissible comultiplication."""
    return derived_package(P, StructureKind.HOM_LIE, gamma=commutator(admissible_comultiplication(P)))


def le1_report(P: StructurePackage) -> Le1Report:
    """Evaluate both candidate forms of the associator identity for Δ̃."""
    field = P.field
    half = field.half()
    quarter = field.mul(half, half)
    alpha, gamma = P.alpha, P.comap("gamma")
    dt = admissible_comultiplication(P)

    associator = sub(compose_pair(dt, alpha, dt), compose_pair(alpha, dt, dt))
    lhs = sub(associator, permute(TAU_I, associator))
    rhs_half = lincomb([(-half, permute(TAU_I, compose_pair(gamma, alpha, gamma)))])
    rhs_quarter = lincomb([(-quarter, compose_pair(alpha, gamma, gamma))])
    cyclic_sum = add(lhs, permute(XI, lhs), permute(XI2, lhs))

    bracket = derived_package(P, StructureKind.HOM_LIE, gamma=commutator(dt))
    is_admissible = check_structure(bracket, axioms=["cojacobi"]).passed

    report = Le1Report(lhs, rhs_half, rhs_quarter, cyclic_sum, is_admissible)
    logger.debug(f"Associator identity verdict: {report.verdict}")
    return report


def sub_homlie(P: StructurePackage) -> StructurePackage:
    """The underlying Hom-Lie coalgebra (γ, α)."""
    require_kind(P, StructureKind.POST_HOM_LIE, operation="sub_homlie")
    return derived_package(P, StructureKind.HOM_LIE, gamma=P.comap("gamma"))


def posthomlie_derive(P: StructurePackage,
                      target: PostHomLieTarget) -> Union[StructurePackage, Le1Report]:
    """
    Dispatch one of the post-Hom-Lie derivations.

    Raises:
        KindMismatch: If ``P`` is not PostHomLie
        CharacteristicConflict: For ``admissible``/``le1_report`` in characteristic 2
    """
    require_kind(P, StructureKind.POST_HOM_LIE, operation="posthomlie_derive")
    target = PostHomLieTarget(target)
    if target is PostHomLieTarget.TILDE:
        return tilde(P)
    if target is PostHomLieTarget.ADMISSIBLE:
        return admissible(P)
    if target is PostHomLieTarget.LE1_REPORT:
        return le1_report(P)
    return sub_homlie(P)


def rb_homlie_to_posthomlie(S: StructurePackage) -> StructurePackage:
    """PostHomLie package (λγ, (R⊗I)∘γ, α) from a Rota-Baxter Hom-Lie coalgebra."""
    require_kind(S, StructureKind.HOM_LIE_RB, operation="rb_homlie_to_posthomlie")
    gamma, r, lam = S.comap("gamma"), S.rb.operator, S.rb.weight
    return derived_package(
        S, StructureKind.POST_HOM_LIE,
        gamma=lincomb([(lam, gamma)]),
        delta=compose_pair(r, identity(S.space, S.field), gamma),
    )


def tensor_posthomlie(P: StructurePackage, Q: StructurePackage,
                      space_name: str = "T") -> StructurePackage:
    """
    PostHomLie structure on C′⊗C from a cocommutative Hom-coassociative C′.

    The basis of C′⊗C is lexicographic with the C′ index major, and every
    comap is regrouped as (I⊗τ⊗I)∘(Δ′⊗m): Δ̃ = Δ′⊗Δ, γ̃ = Δ′⊗γ, α̃ = α′⊗α.

    Args:
        P: PostHomLie package on C
        Q: HomCoassoc package on C′
        space_name: Name of the product space

    Raises:
        KindMismatch: If the kinds or fields are wrong
        NotCocommutative: If Δ′ ≠ τ∘Δ′
    """
    require_kind(P, StructureKind.POST_HOM_LIE, operation="tensor_posthomlie")
    require_kind(Q, StructureKind.HOM_COASSOC, operation="tensor_posthomlie")
    if P.field != Q.field:
        raise KindMismatch(f"Factors live over different fields: {Q.field} and {P.field}")
    coproduct = Q.comap("delta")
    if coproduct != permute(TAU, coproduct):
        raise NotCocommutative("The Hom-coassociative factor is not cocommutative")

    space = product_space(Q.space, P.space, space_name)
    legs2 = [space, space, space]
    comaps = {name: kron(coproduct, P.comap(name), legs2) for name in ("gamma", "delta")}
    alpha = kron(Q.alpha, P.alpha, [space, space])
    return StructurePackage(StructureKind.POST_HOM_LIE, space, P.field, alpha, comaps)


def permute_basis(S: StructurePackage, order: list[int]) -> StructurePackage:
    """
    Isomorphic copy of ``S`` under the basis relabelling e'_t = e_{order[t-1]}.

    Args:
        S: Any package
        order: A permutation of 1..dim given as a list
    """
    idx = [i - 1 for i in order]
    space = S.space

    def relabel(tensor: TensorMap) -> TensorMap:
        arr = tensor.coeffs
        for axis in range(arr.ndim):
            arr = arr.take(idx, axis=axis)
        return TensorMap(space, tuple(space for _ in tensor.cod), arr, tensor.field)

    rb = S.rb
    maps = {name: relabel(m) for name, m in S.comaps.items()}
    result = StructurePackage(S.kind, space, S.field, relabel(S.alpha), maps, rb)
    if rb is not None:
        result = result.with_maps(rb=relabel(rb.operator))
    return result
