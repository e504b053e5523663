"""
Exact tensor calculus over Q and prime fields.

Linear maps between small spaces are stored as dense structure constants;
every coalgebraic identity is a combination of permutations, (h1⊗h2)∘D
compositions and linear combinations.

Usage:
    from tensorcore import FieldSpec, SpaceId, TensorMap, compose_pair, TAU

    field = FieldSpec.prime(5)
    C = SpaceId("C", 1)
    delta = TensorMap.from_rows(C, (C, C), field, {1: [(1, (1, 1))]})
    alpha = TensorMap.identity(C, field)
    coassoc = compose_pair(alpha, delta, delta)
"""

from .calculus import (
    add,
    compose,
    compose_pair,
    identity,
    is_invertible,
    kron,
    lincomb,
    matrix_inverse,
    matrix_power,
    permute,
    precompose,
    product_space,
    relabel,
    scale,
    sub,
)
from .errors import (
    ArityMismatch,
    ArityOverflow,
    CharacteristicConflict,
    EmptyInput,
    InvalidPermutation,
    NonPrimeModulus,
    ShapeError,
    SignatureMismatch,
    SingularMatrix,
    TensorCoreError,
)
from .fields import FieldKind, FieldSpec, Scalar
from .legs import I_TAU, REVERSE3, TAU, TAU_I, XI, XI2, LegPermutation
from .tensor_map import SpaceId, TensorMap

__all__ = [
    "FieldKind",
    "FieldSpec",
    "Scalar",
    "SpaceId",
    "TensorMap",
    "LegPermutation",
    "TAU",
    "XI",
    "XI2",
    "TAU_I",
    "I_TAU",
    "REVERSE3",
    "lincomb",
    "scale",
    "add",
    "sub",
    "permute",
    "compose_pair",
    "precompose",
    "compose",
    "identity",
    "matrix_power",
    "matrix_inverse",
    "is_invertible",
    "kron",
    "product_space",
    "relabel",
    "TensorCoreError",
    "SignatureMismatch",
    "ArityMismatch",
    "ArityOverflow",
    "EmptyInput",
    "ShapeError",
    "InvalidPermutation",
    "NonPrimeModulus",
    "CharacteristicConflict",
    "SingularMatrix",
]
