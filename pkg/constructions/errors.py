"""
Exceptions raised by construction rules.
"""

from typing import Optional


class ConstructionError(Exception):
    """Base class for construction failures."""


class NotEndomorphism(ConstructionError):
    """A twist map fails one of the endomorphism equations."""

    def __init__(self, message: str, equation: Optional[str] = None):
        super().__init__(message)
        self.equation = equation


class UnsupportedKind(ConstructionError):
    """The rule is not defined for the package's structure kind."""


class NotMultiplicative(ConstructionError):
    """The package's own α is not an endomorphism of its structure."""


class SingularTwist(ConstructionError):
    """The inverse twist was requested for a non-invertible α."""


class WeightMismatch(ConstructionError):
    """The Rota-Baxter weight differs from the one the rule requires."""


class NotCocommutative(ConstructionError):
    """A comultiplication required to be cocommutative is not."""


class UnknownRule(ConstructionError):
    """No construction rule is registered under the requested id."""


class InvalidParameter(ConstructionError):
    """A rule parameter is missing, unknown or malformed."""


class EnumerationTooLarge(ConstructionError):
    """An exhaustive endomorphism search would visit too many maps."""
