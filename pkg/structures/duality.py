"""
Opposite tridendriform coalgebras and dualization of finite-dimensional
tridendriform algebras.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from tensorcore import TAU, FieldSpec, SpaceId, TensorMap, permute

from .errors import AlgebraShapeError, KindMismatch
from .schemas import AxiomEntry, CheckReport, StructureKind, StructurePackage

logger = logging.getLogger(__name__)

# algebra products ⊣, ⊢, · correspond to the comaps Δ₋₁, Δ₁, Δ₀
PRODUCT_TO_COMAP = {"left": "delta_m1", "right": "delta_1", "dot": "delta_0"}


def opposite_tridend(S: StructurePackage) -> StructurePackage:
    """
    The opposite coalgebra: Δ₋₁' = τ∘Δ₁, Δ₁' = τ∘Δ₋₁, Δ₀' = τ∘Δ₀, same α.

    Raises:
        KindMismatch: If ``S`` is not tridendriform
    """
    if S.kind is not StructureKind.HOM_TRIDENDRIFORM:
        raise KindMismatch(f"opposite_tridend needs HomTridendriform, got {S.kind.value}")
    return S.with_maps(
        delta_m1=permute(TAU, S.comap("delta_1")),
        delta_1=permute(TAU, S.comap("delta_m1")),
        delta_0=permute(TAU, S.comap("delta_0")),
    )


@dataclass(frozen=True)
class TridendriformAlgebra:
    """
    Structure constants of a finite-dimensional Hom-tridendriform algebra.

    ``products[name][i][j][k]`` is the coefficient of e_k in e_i ∘ e_j for
    ``name`` in ``left`` (⊣), ``right`` (⊢), ``dot`` (·); ``alpha[i][j]`` is the
    coefficient of e_j in α(e_i).
    """

    field: FieldSpec
    dim: int
    products: Dict[str, np.ndarray]
    alpha: np.ndarray

    def __post_init__(self):
        if set(self.products) != set(PRODUCT_TO_COMAP):
            raise AlgebraShapeError(f"Products must be exactly {sorted(PRODUCT_TO_COMAP)}")
        n = self.dim
        canonical = {}
        for name, table in self.products.items():
            arr = np.asarray(table, dtype=object)
            if arr.shape != (n, n, n):
                raise AlgebraShapeError(f"Product {name} has shape {arr.shape}, expected {(n, n, n)}")
            canonical[name] = self.field.canonical_array(arr)
        alpha = np.asarray(self.alpha, dtype=object)
        if alpha.shape != (n, n):
            raise AlgebraShapeError(f"alpha has shape {alpha.shape}, expected {(n, n)}")
        object.__setattr__(self, "products", canonical)
        object.__setattr__(self, "alpha", self.field.canonical_array(alpha))

    @classmethod
    def associative(cls, field: FieldSpec, dim: int, dot, alpha=None) -> "TridendriformAlgebra":
        """Algebra with only the middle product (⊣ = ⊢ = 0)."""
        zero = np.zeros((dim, dim, dim), dtype=object)
        return cls(field, dim, {"left": zero, "right": zero, "dot": dot},
                   np.eye(dim, dtype=object) if alpha is None else alpha)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TridendriformAlgebra):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and all(np.array_equal(self.products[k], other.products[k]) for k in PRODUCT_TO_COMAP)
                and np.array_equal(self.alpha, other.alpha))

    def multiply(self, name: str, x: list, y: list) -> list:
        """Product of two coordinate vectors."""
        table = self.products[name]
        n = self.dim
        out = [0] * n
        for i, j in itertools.product(range(n), repeat=2):
            if x[i] == 0 or y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * table[i, j, k]
        return [self.field.scalar(v) for v in out]

    def twist(self, x: list) -> list:
        n = self.dim
        return [self.field.scalar(sum(x[i] * self.alpha[i, j] for i in range(n))) for j in range(n)]


def dualize_algebra(A: TridendriformAlgebra, space_name: str = "C") -> StructurePackage:
    """
    Coalgebra on the dual basis: D[k][i][j] = m[i][j][k], α replaced by its transpose.

    Raises:
        AlgebraShapeError: If the constants are malformed
    """
    space = SpaceId(space_name, A.dim)
    comaps = {}
    for product, comap in PRODUCT_TO_COMAP.items():
        comaps[comap] = TensorMap(space, (space, space), np.transpose(A.products[product], (2, 0, 1)), A.field)
    alpha = TensorMap(space, (space,), A.alpha.T, A.field)
    return StructurePackage(StructureKind.HOM_TRIDENDRIFORM, space, A.field, alpha, comaps)


def codualize(S: StructurePackage) -> TridendriformAlgebra:
    """Inverse of ``dualize_algebra``: read a tridendriform coalgebra as algebra constants."""
    if S.kind is not StructureKind.HOM_TRIDENDRIFORM:
        raise KindMismatch(f"codualize needs HomTridendriform, got {S.kind.value}")
    products = {product: np.transpose(S.comap(comap).coeffs, (1, 2, 0))
                for product, comap in PRODUCT_TO_COMAP.items()}
    return TridendriformAlgebra(S.field, S.dim, products, S.alpha.coeffs.T)


# each axiom lists (sign, outer, inner, alpha_slot) terms of m_outer(m_inner ⊗ α) or
# m_outer(α ⊗ m_inner); they are the product-side forms of (c1)..(c7)
_SUMS = ("left", "right", "dot")
_ALGEBRA_AXIOMS = {
    "c1": [(1, "left", ("left",), "right_alpha")] + [(-1, "left", (p,), "left_alpha") for p in _SUMS],
    "c2": [(1, "left", ("right",), "right_alpha"), (-1, "right", ("left",), "left_alpha")],
    "c3": [(1, "right", ("right",), "left_alpha")] + [(-1, "right", (p,), "right_alpha") for p in _SUMS],
    "c4": [(1, "dot", ("left",), "right_alpha"), (-1, "dot", ("right",), "left_alpha")],
    "c5": [(1, "dot", ("right",), "right_alpha"), (-1, "right", ("dot",), "left_alpha")],
    "c6": [(1, "left", ("dot",), "right_alpha"), (-1, "dot", ("left",), "left_alpha")],
    "c7": [(1, "dot", ("dot",), "right_alpha"), (-1, "dot", ("dot",), "left_alpha")],
}


def check_algebra(A: TridendriformAlgebra) -> CheckReport:
    """
    Evaluate the Hom-tridendriform algebra identities by direct products.

    ``right_alpha`` terms are (x ∘inner y) ∘outer α(z); ``left_alpha`` terms are
    α(x) ∘outer (y ∘inner z). The residual of each identity is stored as a
    TensorMap whose coefficient at (k; x, y, z) is the e_k component of the
    identity evaluated on (e_x, e_y, e_z).
    """
    n = A.dim
    space = SpaceId("A", n)
    basis = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    report = CheckReport(subject="TridendriformAlgebra")
    for axiom_id, terms in _ALGEBRA_AXIOMS.items():
        residual = np.zeros((n, n, n, n), dtype=object)
        for x, y, z in itertools.product(range(n), repeat=3):
            ex, ey, ez = basis[x], basis[y], basis[z]
            for sign, outer, (inner,), slot in terms:
                if slot == "right_alpha":
                    value = A.multiply(outer, A.multiply(inner, ex, ey), A.twist(ez))
                else:
                    value = A.multiply(outer, A.twist(ex), A.multiply(inner, ey, ez))
                for k in range(n):
                    residual[k, x, y, z] += sign * value[k]
        tensor = TensorMap(space, (space, space, space), residual, A.field)
        report.entries.append(AxiomEntry(axiom_id, tensor))
    return report


def classical_dual_package(A: TridendriformAlgebra, kind: StructureKind = StructureKind.HOM_COASSOC,
                           product: str = "dot", space_name: Optional[str] = None) -> StructurePackage:
    """Dual of one product alone, as a single-comap package (e.g. HomCoassoc from ·)."""
    S = dualize_algebra(A, space_name or "C")
    return StructurePackage(kind, S.space, S.field, S.alpha, {"delta": S.comap(PRODUCT_TO_COMAP[product])})
