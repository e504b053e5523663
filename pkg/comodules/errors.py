"""
Exceptions raised by comodule packages and their constructions.
"""

from typing import Optional


class ComoduleError(Exception):
    """Base class for comodule failures."""


class BaseMismatch(ComoduleError):
    """Comodules that must share a base coalgebra do not."""


class NotMultiplicative(ComoduleError):
    """The base coalgebra's α is not an endomorphism of its structure."""


class NotEquivariant(ComoduleError):
    """A twisting pair (β, β_M) violates one of its equivariance equations."""

    def __init__(self, message: str, equation: Optional[str] = None):
        super().__init__(message)
        self.equation = equation


class ExponentOverflow(ComoduleError):
    """A 2^k twist exponent exceeds the supported bound."""


class UnknownComoduleRule(ComoduleError):
    """No comodule construction is registered under the requested id."""
