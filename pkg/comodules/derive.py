"""
Comodule constructions: direct sums, regular and tensor comodules, and twists.
"""

import logging
from enum import Enum
from typing import Any, Dict, Optional, Union

import numpy as np

from constructions import endomorphism_violations, yau_twist
from structures import KindMismatch, StructurePackage
from tensorcore import (
    SpaceId,
    TensorMap,
    compose,
    compose_pair,
    identity,
    kron,
    matrix_power,
    precompose,
    product_space,
    relabel,
)

from .errors import (
    BaseMismatch,
    ComoduleError,
    ExponentOverflow,
    NotEquivariant,
    NotMultiplicative,
    UnknownComoduleRule,
)
from .schemas import REGULAR_PAIRING, STRUCTURE_MAPS, ComoduleKind, ComodulePackage, comodule_kind_for

logger = logging.getLogger(__name__)

MAX_TWIST_EXPONENT = 20


class ComoduleRule(str, Enum):
    DIRECT_SUM = "direct_sum"
    REGULAR_K = "regular_k"
    TENSOR_K = "tensor_k"
    TWIST_N0 = "twist_n0"
    TWIST_0K = "twist_0k"
    TWIST_NK = "twist_nk"
    TWIST_BETA = "twist_beta"


class ZeroKExponent(str, Enum):
    """Which printed exponents the (0,k) twist uses."""
    POWER = "power"  # Δ∘α_M^{2^k}, α_M^{2^k}; base ∘α^{2^k−1}, α^{2^k}
    POWER_MINUS_ONE = "minus_one"  # everything twisted by the 2^k−1 power


def _same_base(first: StructurePackage, second: StructurePackage) -> bool:
    return (first.kind is second.kind and first.space == second.space
            and first.field == second.field and first.alpha == second.alpha
            and first.comaps == second.comaps)


def _require_multiplicative(base: StructurePackage) -> None:
    violations = endomorphism_violations(base, base.alpha)
    if violations:
        raise NotMultiplicative(f"Base {base.kind.value} is not multiplicative: {violations[0]} fails")


def _apply_left(Cm: ComodulePackage, f: TensorMap) -> Dict[str, TensorMap]:
    """(f⊗Id_M)∘m for every structure map m."""
    ident = identity(Cm.mspace, Cm.field)
    return {name: compose_pair(f, ident, m) for name, m in Cm.structure_maps.items()}


def _check_exponent(k: int) -> int:
    if k < 0:
        raise ComoduleError(f"Exponent must be non-negative, got {k}")
    if k > MAX_TWIST_EXPONENT:
        raise ExponentOverflow(f"2^{k} exceeds the supported bound 2^{MAX_TWIST_EXPONENT}")
    return 2 ** k


def direct_sum(first: ComodulePackage, second: ComodulePackage, name: str = "M") -> ComodulePackage:
    """
    Block comodule on M₁⊕M₂ (basis of M₁ first).

    Raises:
        BaseMismatch: If the comodules live over different bases
    """
    if first.kind is not second.kind or not _same_base(first.base, second.base):
        raise BaseMismatch("direct_sum needs two comodules over the same base")
    n1, n2 = first.dim, second.dim
    space = SpaceId(name, n1 + n2)
    field = first.field
    L = first.base.space

    alpha = np.zeros((n1 + n2, n1 + n2), dtype=object)
    alpha[:n1, :n1] = first.alpha_m.coeffs
    alpha[n1:, n1:] = second.alpha_m.coeffs
    maps = {}
    for key in STRUCTURE_MAPS[first.kind]:
        block = np.zeros((n1 + n2, L.dim, n1 + n2), dtype=object)
        block[:n1, :, :n1] = first.structure_map(key).coeffs
        block[n1:, :, n1:] = second.structure_map(key).coeffs
        maps[key] = TensorMap(space, (L, space), block, field)
    return ComodulePackage(first.kind, first.base, space, TensorMap(space, (space,), alpha, field), maps)


def regular_comodule(base: StructurePackage, k: int = 0, name: str = "M") -> ComodulePackage:
    """
    The base coalgebra as a comodule over itself, twisted by (α^k⊗I).

    With k = 0 the structure maps are the base comaps themselves and
    α_M = α.

    Raises:
        NotMultiplicative: If k > 0 and the base is not multiplicative
    """
    kind = comodule_kind_for(base)
    if k < 0:
        raise ComoduleError(f"Exponent must be non-negative, got {k}")
    if k > 0:
        _require_multiplicative(base)
    space = SpaceId(name, base.dim)
    L = base.space
    power = matrix_power(base.alpha, k)
    ident = identity(L, base.field)
    maps = {}
    for key, comap_name in REGULAR_PAIRING[kind].items():
        twisted = compose_pair(power, ident, base.comap(comap_name)) if k else base.comap(comap_name)
        maps[key] = relabel(twisted, space, (L, space))
    alpha_m = relabel(base.alpha, space, (space,))
    return ComodulePackage(kind, base, space, alpha_m, maps)


def tensor_comodule(first: ComodulePackage, second: ComodulePackage, k: int = 0,
                    name: str = "M") -> ComodulePackage:
    """
    Comodule on M₁⊗M₂ (lexicographic basis, M₁ index major).

    Each structure map is (α^k⊗Id)∘m₁ ⊗ α_{M₂} + α_{M₁} ⊗ (α^k⊗Id)∘m₂, the
    second summand moved from (M₁, L, M₂) to (L, M₁, M₂); α_M = α_{M₁}⊗α_{M₂}.

    Raises:
        BaseMismatch: If the bases differ
        NotMultiplicative: If the base is not multiplicative
    """
    if first.kind is not second.kind or not _same_base(first.base, second.base):
        raise BaseMismatch("tensor_k needs two comodules over the same base")
    if first.kind is not ComoduleKind.POST_HOM_LIE:
        raise KindMismatch("tensor_k is defined for post-Hom-Lie comodules")
    base = first.base
    _require_multiplicative(base)
    field = base.field
    L = base.space
    space = product_space(first.mspace, second.mspace, name)
    power = matrix_power(base.alpha, k)
    k1 = _apply_left(first, power)
    k2 = _apply_left(second, power)
    a1, a2 = first.alpha_m.coeffs, second.alpha_m.coeffs
    shape = (space.dim, L.dim, space.dim)

    maps = {}
    for key in STRUCTURE_MAPS[first.kind]:
        # outer axes (i, a, x, j, y) and (i, x, j, a, y) both regroup to (i, j, a, x, y)
        left = np.transpose(np.multiply.outer(k1[key].coeffs, a2), (0, 3, 1, 2, 4)).reshape(shape)
        right = np.transpose(np.multiply.outer(a1, k2[key].coeffs), (0, 2, 3, 1, 4)).reshape(shape)
        maps[key] = TensorMap(space, (L, space), field.canonical_array(left + right), field)
    alpha_m = kron(first.alpha_m, second.alpha_m, [space, space])
    return ComodulePackage(first.kind, base, space, alpha_m, maps)


def twist_n0(Cm: ComodulePackage, n: int) -> ComodulePackage:
    """Structure maps (αⁿ⊗Id_M)∘m; base and α_M unchanged."""
    if n < 0:
        raise ComoduleError(f"Exponent must be non-negative, got {n}")
    if n == 0:
        return Cm
    return Cm.with_maps(**_apply_left(Cm, matrix_power(Cm.base.alpha, n)))


def _twist_base(base: StructurePackage, beta: TensorMap, alpha: TensorMap) -> StructurePackage:
    """Base with comaps m∘β and twist map ``alpha``, without endomorphism checks."""
    comaps = {name: precompose(m, beta) for name, m in base.comaps.items()}
    return base.with_maps(alpha=alpha, **comaps)


def twist_0k(Cm: ComodulePackage, k: int,
             exponent: Optional[ZeroKExponent] = None) -> ComodulePackage:
    """
    Twist the comodule by a power of α_M and the base by a power of α.

    ``power`` (the post-Hom-Lie default): maps m∘α_M^{2^k}, α_M^{2^k}, over
    the base (m∘α^{2^k−1}, α^{2^k}). ``minus_one`` (the tridendriform
    default): maps m∘α_M^{2^k−1}, α_M^{2^k−1}, over (m∘α^{2^k−1}, α^{2^k−1}).

    Raises:
        ExponentOverflow: If k > 20
    """
    size = _check_exponent(k)
    if exponent is None:
        exponent = (ZeroKExponent.POWER if Cm.kind is ComoduleKind.POST_HOM_LIE
                    else ZeroKExponent.POWER_MINUS_ONE)
    exponent = ZeroKExponent(exponent)
    base_power = matrix_power(Cm.base.alpha, size - 1)
    if exponent is ZeroKExponent.POWER:
        m_power = matrix_power(Cm.alpha_m, size)
        base = _twist_base(Cm.base, base_power, matrix_power(Cm.base.alpha, size))
    else:
        m_power = matrix_power(Cm.alpha_m, size - 1)
        base = _twist_base(Cm.base, base_power, base_power)
    maps = {name: precompose(m, m_power) for name, m in Cm.structure_maps.items()}
    return Cm.with_maps(base=base, alpha_m=m_power, **maps)


def twist_nk(Cm: ComodulePackage, n: int, k: int) -> ComodulePackage:
    """
    Combined twist (αⁿ⊗Id_M)∘m∘α_M^{2^k} with α_M^{2^k}, over the base
    (m∘α^{2^k−1}, α^{2^k}).
    """
    size = _check_exponent(k)
    if n < 0:
        raise ComoduleError(f"Exponent must be non-negative, got {n}")
    left = matrix_power(Cm.base.alpha, n)
    m_power = matrix_power(Cm.alpha_m, size)
    ident = identity(Cm.mspace, Cm.field)
    maps = {name: precompose(compose_pair(left, ident, m), m_power)
            for name, m in Cm.structure_maps.items()}
    base = _twist_base(Cm.base, matrix_power(Cm.base.alpha, size - 1),
                       matrix_power(Cm.base.alpha, size))
    return Cm.with_maps(base=base, alpha_m=m_power, **maps)


def equivariance_violations(Cm: ComodulePackage, beta: TensorMap, beta_m: TensorMap) -> list[str]:
    """Equations among the twisting-pair conditions that (β, β_M) violates."""
    violations = list(endomorphism_violations(Cm.base, beta))
    if beta_m.dom != Cm.mspace or beta_m.cod != (Cm.mspace,) or beta_m.field != Cm.field:
        return violations + [f"beta_m must be an endomorphism of {Cm.mspace}"]
    if compose(Cm.alpha_m, beta_m) != compose(beta_m, Cm.alpha_m):
        violations.append("alpha_m∘beta_m = beta_m∘alpha_m")
    for name, m in Cm.structure_maps.items():
        if precompose(m, beta_m) != compose_pair(beta, beta_m, m):
            violations.append(f"{name}∘beta_m = (beta⊗beta_m)∘{name}")
    return violations


def twist_beta(Cm: ComodulePackage, beta: TensorMap, beta_m: TensorMap) -> ComodulePackage:
    """
    Maps (β⊗Id_M)∘m∘β_M and α_M∘β_M over the Yau twist of the base by β.

    Raises:
        NotEquivariant: Naming the first violated equation
    """
    violations = equivariance_violations(Cm, beta, beta_m)
    if violations:
        raise NotEquivariant(f"(beta, beta_m) is not a twisting pair: {violations[0]} fails", violations[0])
    ident = identity(Cm.mspace, Cm.field)
    maps = {name: precompose(compose_pair(beta, ident, m), beta_m) for name, m in Cm.structure_maps.items()}
    return Cm.with_maps(base=yau_twist(Cm.base, beta), alpha_m=compose(Cm.alpha_m, beta_m), **maps)


def comodule_derive(subject: Union[ComodulePackage, StructurePackage], rule: ComoduleRule,
                    params: Optional[Dict[str, Any]] = None,
                    aux: Optional[ComodulePackage] = None) -> ComodulePackage:
    """
    Dispatch one comodule construction.

    Args:
        subject: The comodule (or, for ``regular_k``, a base coalgebra)
        rule: Construction to apply
        params: ``n``, ``k``, ``exponent``, ``beta`` and ``beta_m`` as the rule needs
        aux: Second comodule for ``direct_sum`` and ``tensor_k``

    Raises:
        UnknownComoduleRule: For an unknown rule id
        ComoduleError: On missing parameters or violated preconditions
    """
    try:
        rule = ComoduleRule(rule)
    except ValueError as e:
        raise UnknownComoduleRule(f"Unknown comodule rule {rule!r}") from e
    params = dict(params or {})

    if rule is ComoduleRule.REGULAR_K:
        base = subject.base if isinstance(subject, ComodulePackage) else subject
        return regular_comodule(base, int(params.get("k", 0)))
    if not isinstance(subject, ComodulePackage):
        raise KindMismatch(f"{rule.value} needs a comodule package")
    if rule in (ComoduleRule.DIRECT_SUM, ComoduleRule.TENSOR_K):
        if aux is None:
            raise ComoduleError(f"{rule.value} needs a second comodule")
        if rule is ComoduleRule.DIRECT_SUM:
            return direct_sum(subject, aux)
        return tensor_comodule(subject, aux, int(params.get("k", 0)))
    if rule is ComoduleRule.TWIST_N0:
        return twist_n0(subject, int(params.get("n", 0)))
    if rule is ComoduleRule.TWIST_0K:
        return twist_0k(subject, int(params.get("k", 0)), params.get("exponent"))
    if rule is ComoduleRule.TWIST_NK:
        return twist_nk(subject, int(params.get("n", 0)), int(params.get("k", 0)))

    missing = [p for p in ("beta", "beta_m") if p not in params]
    if missing:
        raise ComoduleError(f"twist_beta needs parameters {missing}")
    return twist_beta(subject, params["beta"], params["beta_m"])
