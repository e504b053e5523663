"""
Spaces and linear maps stored as dense structure constants.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from .errors import ArityOverflow, ShapeError
from .fields import FieldSpec, Scalar

MAX_ARITY = 3


@dataclass(frozen=True)
class SpaceId:
    """A named finite-dimensional space with basis e1..e_dim."""

    name: str
    dim: int

    def __post_init__(self):
        if not self.name or not self.name.replace("_", "").isalnum():
            raise ShapeError(f"Invalid space name: {self.name!r}")
        if int(self.dim) < 1:
            raise ShapeError(f"Space {self.name} must have dim >= 1, got {self.dim}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class TensorMap:
    """
    A linear map ``dom -> cod[0] ⊗ ... ⊗ cod[k-1]`` with 1 <= k <= 3.

    ``coeffs[i, j1, .., jk]`` is the coefficient of e_j1⊗..⊗e_jk in the image
    of e_i (0-based array indices, 1-based basis names). For k = 1 this is
    the transpose of the usual matrix. The array is canonical and read-only,
    so equality is plain componentwise comparison.
    """

    dom: SpaceId
    cod: tuple[SpaceId, ...]
    coeffs: np.ndarray
    field: FieldSpec

    def __post_init__(self):
        cod = tuple(self.cod)
        if not 1 <= len(cod) <= MAX_ARITY:
            raise ArityOverflow(f"Codomain arity must be 1..3, got {len(cod)}")
        expected = (self.dom.dim, *(space.dim for space in cod))
        arr = np.asarray(self.coeffs)
        if arr.shape != expected:
            raise ShapeError(f"Coefficient shape {arr.shape} does not match signature {expected}")
        arr = self.field.canonical_array(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "coeffs", arr)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, dom: SpaceId, cod: Sequence[SpaceId], field: FieldSpec) -> "TensorMap":
        shape = (dom.dim, *(space.dim for space in cod))
        return cls(dom, tuple(cod), field.zeros(shape), field)

    @classmethod
    def identity(cls, space: SpaceId, field: FieldSpec) -> "TensorMap":
        return cls(space, (space,), np.eye(space.dim, dtype=np.int64), field)

    @classmethod
    def from_matrix(cls, space: SpaceId, field: FieldSpec,
                    rows: Sequence[Sequence], target: Optional[SpaceId] = None) -> "TensorMap":
        """Arity-1 map with ``rows[i][j]`` = coefficient of e_j in f(e_i)."""
        target = target or space
        values = [[field.scalar(c) for c in row] for row in rows]
        return cls(space, (target,), np.array(values, dtype=object), field)

    @classmethod
    def diagonal(cls, space: SpaceId, field: FieldSpec, values: Sequence) -> "TensorMap":
        arr = np.zeros((space.dim, space.dim), dtype=object)
        for i, value in enumerate(values):
            arr[i, i] = field.scalar(value)
        return cls(space, (space,), arr, field)

    @classmethod
    def scalar_multiple(cls, space: SpaceId, field: FieldSpec, value) -> "TensorMap":
        return cls.diagonal(space, field, [value] * space.dim)

    @classmethod
    def from_rows(cls, dom: SpaceId, cod: Sequence[SpaceId], field: FieldSpec,
                  rows: Mapping[int, Iterable[tuple[Scalar, Sequence[int]]]]) -> "TensorMap":
        """
        Build a map from sparse rows.

        Args:
            dom: Domain space
            cod: Codomain legs
            field: Scalar field
            rows: ``{i: [(coefficient, (j1, .., jk)), ...]}`` with 1-based
                basis indices; repeated index tuples accumulate

        Returns:
            TensorMap: The assembled map
        """
        shape = (dom.dim, *(space.dim for space in cod))
        arr = np.zeros(shape, dtype=object)
        for i, terms in rows.items():
            for coefficient, index in terms:
                if len(index) != len(cod):
                    raise ShapeError(f"Index {tuple(index)} does not match arity {len(cod)}")
                position = (i - 1, *(j - 1 for j in index))
                if any(p < 0 or p >= n for p, n in zip(position, shape)):
                    raise ShapeError(f"Basis index {(i, *index)} out of range for {shape}")
                arr[position] = arr[position] + field.scalar(coefficient)
        return cls(dom, tuple(cod), arr, field)

    # -- inspection ------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.cod)

    @property
    def signature(self) -> tuple[SpaceId, tuple[SpaceId, ...]]:
        return (self.dom, self.cod)

    def entry(self, *index: int) -> Scalar:
        """Coefficient at 0-based array position ``index``."""
        return self.field.scalar(self.coeffs[index])

    def is_zero(self) -> bool:
        return not bool(np.any(self.coeffs != 0))

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self.coeffs != 0))

    def support(self) -> list[tuple[int, ...]]:
        """Sorted 1-based positions ``(i, j1, .., jk)`` of nonzero coefficients."""
        positions = np.argwhere(self.coeffs != 0)
        return sorted(tuple(int(p) + 1 for p in pos) for pos in positions)

    def first_failing_basis_index(self) -> Optional[int]:
        """Smallest 1-based domain index whose image is nonzero, if any."""
        support = self.support()
        return support[0][0] if support else None

    def row(self, i: int) -> list[tuple[Scalar, tuple[int, ...]]]:
        """Nonzero terms of the image of e_i (1-based), sorted by basis index."""
        block = self.coeffs[i - 1]
        terms = []
        for pos in np.argwhere(block != 0):
            index = tuple(int(p) for p in pos)
            terms.append((self.field.scalar(block[index]), tuple(p + 1 for p in index)))
        return sorted(terms, key=lambda term: term[1])

    def rows(self) -> Iterator[tuple[int, list[tuple[Scalar, tuple[int, ...]]]]]:
        for i in range(1, self.dom.dim + 1):
            yield i, self.row(i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorMap):
            return NotImplemented
        return (self.signature == other.signature and self.field == other.field
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    def __hash__(self) -> int:
        return hash((self.signature, self.field, tuple(self.coeffs.ravel().tolist())))

    def __repr__(self) -> str:
        cod = ",".join(space.name for space in self.cod)
        return f"TensorMap({self.dom.name}->({cod}), {self.field.label}, nnz={self.nonzero_count()})"
