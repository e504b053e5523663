"""
Comultiplications derived from coassociative, Rota-Baxter, dendriform,
tridendriform and post-Hom-Poisson packages.
"""

import logging
from enum import Enum
from typing import Optional

from structures import KindMismatch, StructureKind, StructurePackage
from tensorcore import TAU, Scalar, TensorMap, compose_pair, identity, lincomb, permute, sub

from .errors import WeightMismatch

logger = logging.getLogger(__name__)


class RbTarget(str, Enum):
    """Structures obtainable from a Rota-Baxter Hom-coassociative coalgebra."""
    TRIDEND = "tridend"
    DENDRIFORM = "dendriform"
    PRELIE0 = "prelie0"
    PRELIE_M1 = "prelie_m1"
    DENDRIFORM_B = "dendriform_B"


def require_kind(S: StructurePackage, *kinds: StructureKind, operation: str) -> None:
    if S.kind not in kinds:
        expected = ", ".join(k.value for k in kinds)
        raise KindMismatch(f"{operation} needs {expected}, got {S.kind.value}")


def derived_package(S: StructurePackage, kind: StructureKind, **comaps: TensorMap) -> StructurePackage:
    """A package of ``kind`` on ``S``'s space and α, without Rota-Baxter data."""
    return StructurePackage(kind, S.space, S.field, S.alpha, comaps)


def commutator(delta: TensorMap) -> TensorMap:
    """(1−τ)∘Δ"""
    return sub(delta, permute(TAU, delta))


def anticommutator(delta: TensorMap) -> TensorMap:
    """(1+τ)∘Δ"""
    return lincomb([(1, delta), (1, permute(TAU, delta))])


def commutator_cobracket(S: StructurePackage) -> StructurePackage:
    """HomLie package with γ = Δ − τ∘Δ and the same α."""
    require_kind(S, StructureKind.HOM_COASSOC, operation="commutator_cobracket")
    return derived_package(S, StructureKind.HOM_LIE, gamma=commutator(S.comap("delta")))


def tridend_sum(S: StructurePackage) -> StructurePackage:
    """HomCoassoc package with Δ = Δ₋₁ + Δ₀ + Δ₁."""
    require_kind(S, StructureKind.HOM_TRIDENDRIFORM, operation="tridend_sum")
    delta = lincomb([(1, S.comap(n)) for n in ("delta_m1", "delta_0", "delta_1")])
    return derived_package(S, StructureKind.HOM_COASSOC, delta=delta)


def _require_weight(S: StructurePackage, weight: Scalar, target: RbTarget) -> None:
    if S.rb.weight != S.field.scalar(weight):
        raise WeightMismatch(
            f"{target.value} needs weight {weight}, package has {S.field.format_scalar(S.rb.weight)}"
        )


def rb_coassoc_derive(S: StructurePackage, target: RbTarget,
                      weight: Optional[Scalar] = None) -> StructurePackage:
    """
    Split the comultiplication of a Rota-Baxter Hom-coassociative coalgebra.

    Args:
        S: HomCoassocRB package with operator R and weight λ
        target: Structure to assemble
        weight: For ``dendriform_B``, the weight the operator is meant to
            carry; it must equal the package's weight

    Returns:
        StructurePackage: tridend gives (Δ₋₁, λΔ, Δ₁) with Δ₋₁ = (I⊗R)∘Δ
        and Δ₁ = (R⊗I)∘Δ; dendriform gives (Δ₋₁ + λΔ, Δ₁); prelie0 gives
        (R⊗I)∘Δ − τ∘(I⊗R)∘Δ; prelie_m1 subtracts Δ from that; dendriform_B
        gives ((I⊗R)∘Δ − Δ, (R⊗I)∘Δ + Δ)

    Raises:
        KindMismatch: If ``S`` is not HomCoassocRB
        WeightMismatch: If the weight is not the one the target needs
    """
    require_kind(S, StructureKind.HOM_COASSOC_RB, operation="rb_coassoc_derive")
    target = RbTarget(target)
    delta, r, lam = S.comap("delta"), S.rb.operator, S.rb.weight
    ident = identity(S.space, S.field)
    i_r = compose_pair(ident, r, delta)
    r_i = compose_pair(r, ident, delta)

    if target is RbTarget.TRIDEND:
        return derived_package(S, StructureKind.HOM_TRIDENDRIFORM,
                               delta_m1=i_r, delta_0=lincomb([(lam, delta)]), delta_1=r_i)
    if target is RbTarget.DENDRIFORM:
        return derived_package(S, StructureKind.HOM_DENDRIFORM,
                               delta_m1=lincomb([(1, i_r), (lam, delta)]), delta_1=r_i)
    if target is RbTarget.PRELIE0:
        _require_weight(S, 0, target)
        return derived_package(S, StructureKind.HOM_PRELIE, delta=sub(r_i, permute(TAU, i_r)))
    if target is RbTarget.PRELIE_M1:
        _require_weight(S, -1, target)
        return derived_package(S, StructureKind.HOM_PRELIE,
                               delta=lincomb([(1, r_i), (-1, permute(TAU, i_r)), (-1, delta)]))

    if weight is not None:
        _require_weight(S, weight, target)
    return derived_package(S, StructureKind.HOM_DENDRIFORM,
                           delta_m1=sub(i_r, delta), delta_1=lincomb([(1, r_i), (1, delta)]))


def dendriform_to_prelie(S: StructurePackage) -> StructurePackage:
    """HomPreLie package with Δ = Δ₁ − τ∘Δ₋₁."""
    require_kind(S, StructureKind.HOM_DENDRIFORM, operation="dendriform_to_prelie")
    delta = sub(S.comap("delta_1"), permute(TAU, S.comap("delta_m1")))
    return derived_package(S, StructureKind.HOM_PRELIE, delta=delta)


def tridend_to_dendriform(S: StructurePackage) -> StructurePackage:
    """The dendriform package (Δ₋₁ + Δ₀, Δ₁) merging the middle comap to the left."""
    require_kind(S, StructureKind.HOM_TRIDENDRIFORM, operation="tridend_to_dendriform")
    return derived_package(S, StructureKind.HOM_DENDRIFORM,
                           delta_m1=lincomb([(1, S.comap("delta_m1")), (1, S.comap("delta_0"))]),
                           delta_1=S.comap("delta_1"))


def tridend_to_posthomlie(S: StructurePackage) -> StructurePackage:
    """PostHomLie package with γ = (1−τ)∘Δ₀ and Δ = Δ₁ − τ∘Δ₋₁."""
    require_kind(S, StructureKind.HOM_TRIDENDRIFORM, operation="tridend_to_posthomlie")
    return derived_package(
        S, StructureKind.POST_HOM_LIE,
        gamma=commutator(S.comap("delta_0")),
        delta=sub(S.comap("delta_1"), permute(TAU, S.comap("delta_m1"))),
    )


def postpoisson_to_homopoisson(S: StructurePackage) -> StructurePackage:
    """
    HomPoisson package with Δ_A = (1−τ)∘Δ· + γ as cobracket and
    Δ_R = (1+τ)∘Δ⋆ + Δ∗ as comultiplication.
    """
    require_kind(S, StructureKind.POST_HOM_POISSON, operation="postpoisson_to_homopoisson")
    bracket = lincomb([(1, commutator(S.comap("delta"))), (1, S.comap("gamma"))])
    product = lincomb([(1, anticommutator(S.comap("delta_star"))), (1, S.comap("delta_ast"))])
    return derived_package(S, StructureKind.HOM_POISSON, gamma=bracket, delta=product)
