"""
Yau twists: replacing every comap m by m∘β and α by β∘α.
"""

import itertools
import logging
from typing import Iterator, List, Optional

from structures import StructureKind, StructurePackage
from tensorcore import (
    SingularMatrix,
    TensorMap,
    compose,
    compose_pair,
    matrix_power,
    precompose,
)

from .errors import (
    ConstructionError,
    EnumerationTooLarge,
    NotEndomorphism,
    NotMultiplicative,
    SingularTwist,
    UnsupportedKind,
)

logger = logging.getLogger(__name__)

TWISTABLE_KINDS = frozenset({
    StructureKind.HOM_COASSOC,
    StructureKind.HOM_LIE,
    StructureKind.HOM_TRIDENDRIFORM,
    StructureKind.POST_HOM_LIE,
})

# largest number of candidate matrices find_endomorphisms will visit
ENDOMORPHISM_SEARCH_LIMIT = 2**20


def endomorphism_violations(S: StructurePackage, beta: TensorMap) -> List[str]:
    """
    Equations among β∘α = α∘β and m∘β = (β⊗β)∘m that ``beta`` violates.

    An empty list means ``beta`` is an endomorphism of ``S``.
    """
    if beta.arity != 1 or beta.dom != S.space or beta.cod != (S.space,) or beta.field != S.field:
        return [f"beta must be an endomorphism of {S.space} over {S.field}"]
    violations = []
    if compose(beta, S.alpha) != compose(S.alpha, beta):
        violations.append("beta∘alpha = alpha∘beta")
    for name, comap in S.comaps.items():
        if precompose(comap, beta) != compose_pair(beta, beta, comap):
            violations.append(f"{name}∘beta = (beta⊗beta)∘{name}")
    return violations


def is_endomorphism(S: StructurePackage, beta: TensorMap) -> bool:
    return not endomorphism_violations(S, beta)


def yau_twist(S: StructurePackage, beta: TensorMap) -> StructurePackage:
    """
    Twist ``S`` along the endomorphism ``beta``.

    Args:
        S: HomCoassoc, HomLie, HomTridendriform or PostHomLie package
        beta: Arity-1 map on ``S.space``

    Returns:
        StructurePackage: Comaps m∘β and twist map β∘α

    Raises:
        UnsupportedKind: If the kind has no twist rule
        NotEndomorphism: Naming the first violated equation
    """
    if S.kind not in TWISTABLE_KINDS:
        raise UnsupportedKind(f"yau_twist is not defined for {S.kind.value}")
    violations = endomorphism_violations(S, beta)
    if violations:
        raise NotEndomorphism(f"beta is not an endomorphism: {violations[0]} fails", violations[0])
    twisted = {name: precompose(comap, beta) for name, comap in S.comaps.items()}
    return S.with_maps(alpha=compose(beta, S.alpha), **twisted)


def power_twist(S: StructurePackage, n: int = 1, inverse: bool = False) -> StructurePackage:
    """
    Twist a multiplicative package by its own αⁿ (or α⁻ⁿ with ``inverse``).

    With ``inverse`` and ``n=1`` the result carries the identity twist map,
    i.e. the untwisted structure behind an invertible α.

    Raises:
        NotMultiplicative: If α is not an endomorphism of ``S``
        SingularTwist: If ``inverse`` is set and α is singular
    """
    if n < 0:
        raise ConstructionError(f"Twist exponent must be non-negative, got {n}")
    if S.kind not in TWISTABLE_KINDS:
        raise UnsupportedKind(f"power_twist is not defined for {S.kind.value}")
    violations = endomorphism_violations(S, S.alpha)
    if violations:
        raise NotMultiplicative(f"{S.kind.value} package is not multiplicative: {violations[0]} fails")
    if n == 0:
        return S
    try:
        beta = matrix_power(S.alpha, -n if inverse else n)
    except SingularMatrix as e:
        raise SingularTwist(f"alpha is not invertible over {S.field.label}") from e
    return yau_twist(S, beta)


def _candidate_matrices(S: StructurePackage) -> Iterator[TensorMap]:
    n = S.dim
    for values in itertools.product(S.field.elements(), repeat=n * n):
        rows = [values[i * n:(i + 1) * n] for i in range(n)]
        yield TensorMap.from_matrix(S.space, S.field, rows)


def find_endomorphisms(S: StructurePackage, limit: Optional[int] = None,
                       include_zero: bool = False) -> List[TensorMap]:
    """
    Every arity-1 map over F_p that is an endomorphism of ``S``.

    Candidates are visited in lexicographic order of their row-major
    entries, so the result is deterministic.

    Args:
        S: Package over a prime field
        limit: Stop after this many endomorphisms
        include_zero: Keep the zero map (always an endomorphism)

    Returns:
        List[TensorMap]: Endomorphisms in visiting order

    Raises:
        EnumerationTooLarge: If p^(dim²) exceeds the search limit or the
            field is Q
    """
    if not S.field.is_prime:
        raise EnumerationTooLarge("Endomorphisms can only be enumerated over a prime field")
    size = S.field.p ** (S.dim * S.dim)
    if size > ENDOMORPHISM_SEARCH_LIMIT:
        raise EnumerationTooLarge(f"{size} candidate maps exceed the limit {ENDOMORPHISM_SEARCH_LIMIT}")

    found: List[TensorMap] = []
    for beta in _candidate_matrices(S):
        if not include_zero and beta.is_zero():
            continue
        if is_endomorphism(S, beta):
            found.append(beta)
            if limit is not None and len(found) >= limit:
                break
    logger.debug(f"Found {len(found)} endomorphisms of {S.kind.value} (dim {S.dim}, {S.field.label})")
    return found
