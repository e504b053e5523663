"""
Exceptions raised by the exact tensor calculus.
"""


class TensorCoreError(Exception):
    """Base class for every failure of the tensor calculus."""


class SignatureMismatch(TensorCoreError):
    """Maps that must share a domain/codomain signature do not."""


class ArityMismatch(TensorCoreError):
    """A leg permutation was applied to a map of a different arity."""


class ArityOverflow(TensorCoreError):
    """An operation would produce more than three output legs."""


class EmptyInput(TensorCoreError):
    """A linear combination was requested over no terms."""


class ShapeError(TensorCoreError):
    """Coefficient array shape does not match the declared signature."""


class InvalidPermutation(TensorCoreError):
    """Leg permutation is not a bijection of {1..arity}."""


class NonPrimeModulus(TensorCoreError):
    """A prime field was requested with a non-prime or out of range modulus."""


class CharacteristicConflict(TensorCoreError):
    """A scalar (e.g. 1/2) does not exist in the field's characteristic."""


class SingularMatrix(TensorCoreError):
    """An arity-1 map has no inverse over its field."""
