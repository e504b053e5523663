"""
Exceptions raised while assembling or checking structure packages.
"""


class StructureError(Exception):
    """Base class for structure package errors."""


class KindMismatch(StructureError):
    """Component maps do not match what the structure kind requires."""


class UnknownAxiom(StructureError):
    """An axiom id is not defined for the package's kind."""


class AlgebraShapeError(StructureError):
    """Algebra structure constants have the wrong shape."""
