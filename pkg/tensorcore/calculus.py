"""
Tensor calculus on structure constants.

Every identity checked by the engine is assembled from four operations:
``lincomb``, ``permute``, ``compose_pair`` (the pattern (h1⊗h2)∘D) and
``precompose`` (D∘f). All of them are pure and return canonical maps.
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np
from sympy import Matrix

from .errors import (
    ArityMismatch,
    ArityOverflow,
    EmptyInput,
    SignatureMismatch,
    SingularMatrix,
)
from .fields import FieldSpec, Scalar
from .legs import LegPermutation
from .tensor_map import MAX_ARITY, SpaceId, TensorMap

logger = logging.getLogger(__name__)


def _contract(left: np.ndarray, right: np.ndarray, axis: int, field: FieldSpec) -> np.ndarray:
    """Sum over ``left``'s ``axis`` against ``right``'s first axis, then reduce."""
    return field.canonical_array(np.tensordot(left, right, axes=([axis], [0])))


def lincomb(terms: Iterable[tuple[Scalar, TensorMap]]) -> TensorMap:
    """
    Coefficientwise linear combination Σ c·T.

    Raises:
        EmptyInput: If ``terms`` is empty
        SignatureMismatch: If the maps differ in signature or field
    """
    terms = list(terms)
    if not terms:
        raise EmptyInput("lincomb needs at least one term")
    first = terms[0][1]
    field = first.field
    acc = field.zeros(first.coeffs.shape)
    for coefficient, tensor in terms:
        if tensor.signature != first.signature or tensor.field != field:
            raise SignatureMismatch(f"Cannot combine {tensor!r} with {first!r}")
        acc = field.canonical_array(acc + field.scalar(coefficient) * tensor.coeffs)
    return TensorMap(first.dom, first.cod, acc, field)


def scale(coefficient: Scalar, tensor: TensorMap) -> TensorMap:
    return lincomb([(coefficient, tensor)])


def add(*tensors: TensorMap) -> TensorMap:
    return lincomb([(1, t) for t in tensors])


def sub(left: TensorMap, right: TensorMap) -> TensorMap:
    return lincomb([(1, left), (-1, right)])


def permute(perm: LegPermutation, tensor: TensorMap) -> TensorMap:
    """
    Apply Φσ to the output legs: output leg t receives input leg ``perm.source[t-1]``.

    Raises:
        ArityMismatch: If the permutation and map arities differ
    """
    if perm.arity != tensor.arity:
        raise ArityMismatch(f"Permutation of arity {perm.arity} applied to arity-{tensor.arity} map")
    coeffs = np.transpose(tensor.coeffs, perm.axes())
    cod = tuple(tensor.cod[s - 1] for s in perm.source)
    return TensorMap(tensor.dom, cod, coeffs, tensor.field)


def compose_pair(h1: TensorMap, h2: TensorMap, delta: TensorMap) -> TensorMap:
    """
    Structure constants of (h1⊗h2)∘delta.

    Args:
        h1: Map applied to the first output leg of ``delta``
        h2: Map applied to the second output leg of ``delta``
        delta: An arity-2 map

    Returns:
        TensorMap: ``delta.dom -> h1.cod + h2.cod``

    Raises:
        SignatureMismatch: If the legs do not line up
        ArityOverflow: If the result would have more than three legs
    """
    if delta.arity != 2:
        raise SignatureMismatch(f"compose_pair needs an arity-2 inner map, got {delta!r}")
    if h1.dom != delta.cod[0] or h2.dom != delta.cod[1]:
        raise SignatureMismatch(f"Legs {h1.dom}, {h2.dom} do not match codomain of {delta!r}")
    if h1.field != delta.field or h2.field != delta.field:
        raise SignatureMismatch("compose_pair operands live over different fields")
    if h1.arity + h2.arity > MAX_ARITY:
        raise ArityOverflow(f"(h1⊗h2)∘D would have {h1.arity + h2.arity} legs")

    field = delta.field
    # (i, j, k) x (j, a..) -> (i, k, a..)
    partial = _contract(delta.coeffs, h1.coeffs, 1, field)
    # (i, k, a..) x (k, b..) -> (i, a.., b..)
    result = _contract(np.moveaxis(partial, 1, -1), h2.coeffs, partial.ndim - 1, field)
    return TensorMap(delta.dom, h1.cod + h2.cod, result, field)


def precompose(delta: TensorMap, f: TensorMap) -> TensorMap:
    """
    Structure constants of delta∘f.

    Raises:
        SignatureMismatch: If ``f`` is not arity-1 into ``delta.dom``
    """
    if f.arity != 1 or f.cod[0] != delta.dom:
        raise SignatureMismatch(f"Cannot precompose {delta!r} with {f!r}")
    if f.field != delta.field:
        raise SignatureMismatch("precompose operands live over different fields")
    coeffs = _contract(f.coeffs, delta.coeffs, 1, delta.field)
    return TensorMap(f.dom, delta.cod, coeffs, delta.field)


def compose(f: TensorMap, g: TensorMap) -> TensorMap:
    """f∘g for arity-1 maps."""
    return precompose(f, g)


def identity(space: SpaceId, field: FieldSpec) -> TensorMap:
    return TensorMap.identity(space, field)


def matrix_power(f: TensorMap, n: int) -> TensorMap:
    """fⁿ by binary powering; f⁰ is the identity."""
    if f.arity != 1 or f.cod[0] != f.dom:
        raise SignatureMismatch(f"matrix_power needs an endomorphism, got {f!r}")
    if n < 0:
        return matrix_power(matrix_inverse(f), -n)
    result = identity(f.dom, f.field)
    base = f
    while n:
        if n & 1:
            result = compose(base, result)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def matrix_inverse(f: TensorMap) -> TensorMap:
    """
    Exact inverse of an arity-1 endomorphism.

    Raises:
        SingularMatrix: If f is not invertible over its field
    """
    if f.arity != 1 or f.cod[0] != f.dom:
        raise SignatureMismatch(f"matrix_inverse needs an endomorphism, got {f!r}")
    field = f.field
    matrix = Matrix([[field.scalar(c) for c in row] for row in f.coeffs.tolist()])
    try:
        if field.is_prime:
            inverse = matrix.inv_mod(field.p)
        else:
            inverse = matrix.inv()
    except ValueError as e:
        raise SingularMatrix(f"{f!r} is singular over {field.label}") from e
    rows = [[Fraction(int(entry.p), int(entry.q)) for entry in inverse.row(i)]
            for i in range(inverse.rows)]
    return TensorMap.from_matrix(f.dom, field, rows)


def is_invertible(f: TensorMap) -> bool:
    try:
        matrix_inverse(f)
    except SingularMatrix:
        return False
    return True


def product_space(left: SpaceId, right: SpaceId, name: Optional[str] = None) -> SpaceId:
    """The space left⊗right with lexicographic (left-major) basis."""
    return SpaceId(name or f"{left.name}_{right.name}", left.dim * right.dim)


def kron(f: TensorMap, g: TensorMap, spaces: Optional[Sequence[SpaceId]] = None) -> TensorMap:
    """
    Tensor product of two maps of equal arity, regrouped leg by leg.

    ``(f⊗g)(a⊗x)`` places the t-th legs of ``f(a)`` and ``g(x)`` side by side
    in the t-th output leg, so the result maps ``dom(f)⊗dom(g)`` into
    ``(cod_1(f)⊗cod_1(g)) ⊗ ...``. Bases are lexicographic with the ``f``
    index major.

    Args:
        f: Left factor
        g: Right factor, same arity and field as ``f``
        spaces: Optional product spaces ``[dom, leg1, ..]`` to reuse names

    Returns:
        TensorMap: The regrouped tensor product
    """
    if f.arity != g.arity or f.field != g.field:
        raise SignatureMismatch(f"Cannot form kron of {f!r} and {g!r}")
    k = f.arity
    outer = np.multiply.outer(f.coeffs, g.coeffs)
    # axes of outer: f0, f1..fk, g0, g1..gk -> f0, g0, f1, g1, ..
    order = []
    for t in range(k + 1):
        order.extend([t, k + 1 + t])
    shape = [f.coeffs.shape[t] * g.coeffs.shape[t] for t in range(k + 1)]
    coeffs = np.transpose(outer, order).reshape(shape)
    if spaces is None:
        dom = product_space(f.dom, g.dom)
        cod = tuple(product_space(a, b) for a, b in zip(f.cod, g.cod))
    else:
        dom, cod = spaces[0], tuple(spaces[1:])
    return TensorMap(dom, cod, coeffs, f.field)


def relabel(tensor: TensorMap, dom: SpaceId, cod: Sequence[SpaceId]) -> TensorMap:
    """Same coefficients over differently named spaces of equal dimensions."""
    return TensorMap(dom, tuple(cod), tensor.coeffs, tensor.field)
