"""
Search configuration schema.

``SearchConfig`` describes one witness search: which kind, how large, over
which field, exhaustive or seeded-random, and which maps are pinned.
"""

from enum import Enum
from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from comodules import BASE_KIND, ComoduleKind
from structures import EpsilonReading, StructureKind
from tensorcore import FieldSpec, TensorCoreError, TensorMap

MAX_SEED = 2**64


class SearchMode(str, Enum):
    """How candidates are generated."""
    EXHAUSTIVE = "exhaustive"   # every coefficient vector in lexicographic order
    RANDOM = "random"           # seeded draws, one generator per candidate index


class AlphaConstraint(str, Enum):
    """Which twist maps α a search may produce."""
    IDENTITY = "identity"       # α = id, classical structures
    DIAGONAL = "diagonal"       # α diagonal, free diagonal entries
    FREE = "free"               # every entry of α free


class SearchConfig(BaseModel):
    """Parameters of one witness search."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: Union[StructureKind, ComoduleKind] = Field(description="Structure or comodule kind to search")
    dim: int = Field(default=2, ge=1, le=4, description="Dimension of the (base) space")
    field: str = Field(default="F5", description="Field designation: Q, Fp <p>, F<p>")
    mode: SearchMode = Field(default=SearchMode.RANDOM, description="Exhaustive or seeded random generation")
    budget: int = Field(default=10_000, ge=1, description="Maximum number of candidates visited")
    seed: int = Field(default=0, ge=0, lt=MAX_SEED, description="64-bit seed for random mode")
    alpha: AlphaConstraint = Field(default=AlphaConstraint.IDENTITY, description="Constraint on the twist map")
    fixed: Dict[str, TensorMap] = Field(default={}, description="Maps pinned to given values")
    rb_weight: str = Field(default="1", description="Rota-Baxter weight for the RB kinds")
    density: float = Field(default=1.0, gt=0.0, le=1.0,
                           description="Probability that a random coefficient is drawn nonzero-capable")
    module_dim: int = Field(default=1, ge=1, le=3, description="Comodule space dimension")
    base_witnesses: int = Field(default=4, ge=1, description="Base coalgebras tried per comodule search")
    max_witnesses: Optional[int] = Field(default=None, ge=1, description="Stop after this many witnesses")
    include_trivial: bool = Field(default=False, description="Also emit the all-zero candidate")
    require_multiplicative: bool = Field(default=False, description="Witnesses must also be multiplicative")
    strict_budget: bool = Field(default=False, description="Raise BudgetExceeded instead of flagging it")
    epsilon: EpsilonReading = Field(default=EpsilonReading.XI, description="Reading of ε in the Poisson identities")

    @field_validator('kind', mode='before')
    @classmethod
    def parse_kind(cls, v):
        """Accept kind ids as plain strings for either enum."""
        if isinstance(v, str) and not isinstance(v, Enum):
            for enum in (StructureKind, ComoduleKind):
                try:
                    return enum(v)
                except ValueError:
                    continue
        return v

    @field_validator('field')
    @classmethod
    def validate_field(cls, v):
        try:
            FieldSpec.parse(v)
        except TensorCoreError as e:
            raise ValueError(str(e)) from e
        return v

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    @property
    def is_comodule(self) -> bool:
        return isinstance(self.kind, ComoduleKind)

    @property
    def structure_kind(self) -> StructureKind:
        """The kind of the searched package, or of the base for comodules."""
        if isinstance(self.kind, ComoduleKind):
            return BASE_KIND[self.kind]
        return self.kind
