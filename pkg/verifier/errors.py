"""
Exceptions raised by the file format, theorem registry and campaign runner.
"""

from typing import Optional

from tensorcore import NonPrimeModulus as _FieldNonPrimeModulus


class StructureFileError(Exception):
    """
    Base class for structure file problems.

    ``line`` and ``column`` are 1-based; 0 means the whole file.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")


class FormatSyntaxError(StructureFileError):
    """Malformed line, unknown key or unbalanced block."""


class DimMismatch(StructureFileError):
    """A basis index or space does not match the declared dimensions."""


class UnknownKind(StructureFileError):
    """The ``kind`` header names no known structure or comodule kind."""


class NonPrimeModulus(StructureFileError, _FieldNonPrimeModulus):
    """``field = Fp p`` with p not prime."""


class CampaignError(Exception):
    """Base class for theorem campaign failures."""


class UnknownTheorem(CampaignError):
    """No theorem is registered under the requested id."""


class NoWitnessesFound(CampaignError):
    """Neither the fixtures nor the search produced a hypothesis witness."""

    def __init__(self, message: str, theorem: Optional[str] = None):
        super().__init__(message)
        self.theorem = theorem
