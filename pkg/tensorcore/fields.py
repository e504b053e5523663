"""
Exact scalar domains: the rationals and prime fields F_p.

Scalars are plain Python values: ``Fraction`` over Q and ``int`` residues in
``[0, p)`` over F_p. Coefficient arrays use ``dtype=object`` except for small
primes, where int64 is exact because every contraction reduces mod p.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Union

import numpy as np
from sympy import isprime

from .errors import CharacteristicConflict, NonPrimeModulus, TensorCoreError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

MAX_MODULUS = 2**31
# products of two residues plus a short sum stay below 2^63
INT64_SAFE_MODULUS = 2**28


class FieldKind(str, Enum):
    """Kinds of exact scalar field."""
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"


_to_fraction = np.frompyfunc(Fraction, 1, 1)


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: Q, or F_p with p prime and p <= 2^31."""

    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME_FIELD:
            if self.p is None or self.p < 2 or self.p > MAX_MODULUS or not isprime(self.p):
                raise NonPrimeModulus(f"Modulus {self.p} is not a prime <= 2^31")
        elif self.p is not None:
            raise TensorCoreError("The rational field carries no modulus")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME_FIELD, int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """
        Parse a field designation.

        Accepts ``Q``, ``Fp 5``, ``Fp5`` and ``F5``.

        Raises:
            NonPrimeModulus: If the modulus is not prime
            TensorCoreError: If the text is not a field designation
        """
        raw = text.strip()
        if raw == "Q":
            return cls.rationals()
        for prefix in ("Fp", "F"):
            if raw.startswith(prefix):
                digits = raw[len(prefix):].strip()
                if digits.isdigit():
                    return cls.prime(int(digits))
        raise TensorCoreError(f"Unknown field designation: {text!r}")

    @property
    def is_prime(self) -> bool:
        return self.kind is FieldKind.PRIME_FIELD

    @property
    def characteristic(self) -> int:
        return self.p if self.is_prime else 0

    @property
    def dtype(self):
        if self.is_prime and self.p < INT64_SAFE_MODULUS:
            return np.int64
        return object

    @property
    def label(self) -> str:
        """Short label used in witness file names (``Q``, ``F5``)."""
        return f"F{self.p}" if self.is_prime else "Q"

    @property
    def header(self) -> str:
        """Designation as written in structure files (``Q``, ``Fp 5``)."""
        return f"Fp {self.p}" if self.is_prime else "Q"

    # -- scalars ---------------------------------------------------------

    def scalar(self, value: Union[Scalar, str]) -> Scalar:
        """
        Coerce a value into the field's canonical scalar form.

        Args:
            value: int, Fraction, or a string such as ``-3/2``

        Returns:
            Fraction in lowest terms (Q) or residue in [0, p) (F_p)

        Raises:
            CharacteristicConflict: If a denominator vanishes mod p
        """
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, np.integer):
            value = int(value)
        if not self.is_prime:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise CharacteristicConflict(
                    f"Denominator {value.denominator} vanishes in characteristic {self.p}"
                )
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    @property
    def zero(self) -> Scalar:
        return self.scalar(0)

    @property
    def one(self) -> Scalar:
        return self.scalar(1)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.scalar(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.scalar(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.scalar(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.scalar(-a)

    def inv(self, a: Scalar) -> Scalar:
        a = self.scalar(a)
        if a == 0:
            raise ZeroDivisionError("Zero has no inverse")
        if self.is_prime:
            return pow(a, -1, self.p)
        return 1 / a

    def half(self) -> Scalar:
        """The scalar 1/2; absent in characteristic 2."""
        if self.characteristic == 2:
            raise CharacteristicConflict("1/2 does not exist in characteristic 2")
        return self.scalar(Fraction(1, 2))

    def elements(self) -> Iterator[int]:
        """Every residue of F_p, in increasing order."""
        if not self.is_prime:
            raise TensorCoreError("The rationals cannot be enumerated")
        return iter(range(self.p))

    def format_scalar(self, value: Scalar) -> str:
        value = self.scalar(value)
        if self.is_prime:
            return str(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    # -- arrays ----------------------------------------------------------

    def canonical_array(self, arr) -> np.ndarray:
        """Return a fresh array in canonical scalar form for this field."""
        arr = np.asarray(arr)
        if self.is_prime:
            if self.dtype is object:
                out = np.mod(arr.astype(object), self.p)
            else:
                if arr.dtype == object:
                    arr = np.mod(arr, self.p)
                out = np.mod(arr.astype(np.int64), self.p)
            return out
        if arr.size == 0:
            return arr.astype(object)
        return _to_fraction(arr.astype(object)).astype(object)

    def zeros(self, shape) -> np.ndarray:
        return self.canonical_array(np.zeros(shape, dtype=self.dtype))

    def __str__(self) -> str:
        return self.header
