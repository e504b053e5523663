"""
Schemas for coalgebraic structure packages and check reports.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional

from tensorcore import FieldSpec, Scalar, SpaceId, TensorMap

from .errors import KindMismatch


class StructureKind(str, Enum):
    """Coalgebraic species handled by the engine."""
    HOM_COASSOC = "HomCoassoc"
    HOM_COASSOC_RB = "HomCoassocRB"
    HOM_LIE = "HomLie"
    HOM_LIE_RB = "HomLieRB"
    HOM_PRELIE = "HomPreLie"
    HOM_DENDRIFORM = "HomDendriform"
    HOM_TRIDENDRIFORM = "HomTridendriform"
    COCOMM_HOM_TRIDENDRIFORM = "CoCommHomTridendriform"
    POST_HOM_LIE = "PostHomLie"
    HOM_POISSON = "HomPoisson"
    POST_HOM_POISSON = "PostHomPoisson"


class AxiomRole(str, Enum):
    """How an axiom entry contributes to a report's verdict."""
    REQUIRED = "required"
    OPTIONAL = "optional"
    REPORT_ONLY = "report_only"


class EpsilonReading(str, Enum):
    """Readings of the undefined ε, ε² in the post-Hom-Poisson axioms."""
    XI = "xi"                  # ε = ξ, ε² = ξ²
    XI_INVERSE = "xi_inverse"  # ε = ξ², ε² = ξ


# Δ· is stored as "delta"; Δ⋆ as "delta_star"; Δ∗ as "delta_ast".
REQUIRED_COMAPS: Dict[StructureKind, tuple[str, ...]] = {
    StructureKind.HOM_COASSOC: ("delta",),
    StructureKind.HOM_COASSOC_RB: ("delta",),
    StructureKind.HOM_LIE: ("gamma",),
    StructureKind.HOM_LIE_RB: ("gamma",),
    StructureKind.HOM_PRELIE: ("delta",),
    StructureKind.HOM_DENDRIFORM: ("delta_m1", "delta_1"),
    StructureKind.HOM_TRIDENDRIFORM: ("delta_m1", "delta_0", "delta_1"),
    StructureKind.COCOMM_HOM_TRIDENDRIFORM: ("delta_star", "delta"),
    StructureKind.POST_HOM_LIE: ("gamma", "delta"),
    StructureKind.HOM_POISSON: ("gamma", "delta"),
    StructureKind.POST_HOM_POISSON: ("gamma", "delta", "delta_star", "delta_ast"),
}

RB_KINDS = frozenset({StructureKind.HOM_COASSOC_RB, StructureKind.HOM_LIE_RB})


@dataclass(frozen=True)
class RotaBaxter:
    """A Rota-Baxter operator R together with its weight λ."""
    operator: TensorMap
    weight: Scalar


@dataclass(frozen=True)
class StructurePackage:
    """
    Tagged bundle of a space, its twist map α and the comaps of one kind.

    All maps live on ``space`` over ``field``; ``comaps`` holds exactly the
    names listed in ``REQUIRED_COMAPS[kind]``.
    """

    kind: StructureKind
    space: SpaceId
    field: FieldSpec
    alpha: TensorMap
    comaps: Mapping[str, TensorMap]
    rb: Optional[RotaBaxter] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", StructureKind(self.kind))
        object.__setattr__(self, "comaps", dict(sorted(self.comaps.items())))
        required = set(REQUIRED_COMAPS[self.kind])
        present = set(self.comaps)
        if present != required:
            missing = sorted(required - present)
            extra = sorted(present - required)
            raise KindMismatch(f"{self.kind.value}: missing comaps {missing}, unexpected {extra}")
        self._check_endo("alpha", self.alpha)
        for name, comap in self.comaps.items():
            if comap.dom != self.space or comap.cod != (self.space, self.space):
                raise KindMismatch(f"Comap {name} must map {self.space} -> ({self.space}, {self.space})")
            if comap.field != self.field:
                raise KindMismatch(f"Comap {name} lives over {comap.field}, package over {self.field}")
        if (self.rb is not None) != (self.kind in RB_KINDS):
            raise KindMismatch(f"Rota-Baxter data is required exactly for {sorted(k.value for k in RB_KINDS)}")
        if self.rb is not None:
            self._check_endo("rb", self.rb.operator)
            object.__setattr__(self, "rb", RotaBaxter(self.rb.operator, self.field.scalar(self.rb.weight)))

    def _check_endo(self, name: str, tensor: TensorMap) -> None:
        if tensor.dom != self.space or tensor.cod != (self.space,) or tensor.field != self.field:
            raise KindMismatch(f"Map {name} must be an endomorphism of {self.space} over {self.field}")

    @classmethod
    def zero(cls, kind: StructureKind, space: SpaceId, field: FieldSpec,
             alpha: Optional[TensorMap] = None, rb: Optional[RotaBaxter] = None) -> "StructurePackage":
        """Package of ``kind`` with every comap zero (α defaults to the identity)."""
        kind = StructureKind(kind)
        comaps = {name: TensorMap.zeros(space, (space, space), field) for name in REQUIRED_COMAPS[kind]}
        if kind in RB_KINDS and rb is None:
            rb = RotaBaxter(TensorMap.zeros(space, (space,), field), 0)
        return cls(kind, space, field, alpha or TensorMap.identity(space, field), comaps, rb)

    @property
    def dim(self) -> int:
        return self.space.dim

    def comap(self, name: str) -> TensorMap:
        try:
            return self.comaps[name]
        except KeyError:
            raise KindMismatch(f"{self.kind.value} has no comap {name!r}") from None

    def maps(self) -> Dict[str, TensorMap]:
        """Every arity-1 and arity-2 map of the package, keyed by file name."""
        result = {"alpha": self.alpha, **self.comaps}
        if self.rb is not None:
            result["rb"] = self.rb.operator
        return result

    def with_maps(self, **maps: TensorMap) -> "StructurePackage":
        """Copy with some maps replaced (``alpha``, ``rb`` or comap names)."""
        alpha = maps.pop("alpha", self.alpha)
        rb = self.rb
        if "rb" in maps:
            if self.rb is None:
                raise KindMismatch(f"{self.kind.value} carries no Rota-Baxter operator")
            rb = RotaBaxter(maps.pop("rb"), self.rb.weight)
        comaps = {**self.comaps, **maps}
        return replace(self, alpha=alpha, comaps=comaps, rb=rb)

    def is_zero(self) -> bool:
        return all(comap.is_zero() for comap in self.comaps.values())

    def nonzero_count(self) -> int:
        return sum(tensor.nonzero_count() for tensor in self.maps().values())


@dataclass
class AxiomEntry:
    """Outcome of one axiom: its residual and verdict."""
    axiom_id: str
    residual: TensorMap
    role: AxiomRole = AxiomRole.REQUIRED
    multiplicativity: bool = False

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()

    @property
    def first_failing_basis_index(self) -> Optional[int]:
        return self.residual.first_failing_basis_index()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom_id": self.axiom_id,
            "passed": self.passed,
            "role": self.role.value,
            "multiplicativity": self.multiplicativity,
            "first_failing_basis_index": self.first_failing_basis_index,
            "support": [list(pos) for pos in self.residual.support()],
        }


@dataclass
class CheckReport:
    """Per-axiom residuals for one package."""
    subject: str
    entries: List[AxiomEntry] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """All required axioms vanish."""
        return all(e.passed for e in self.entries if e.role is AxiomRole.REQUIRED)

    @property
    def multiplicative(self) -> bool:
        """All comultiplicativity checks vanish."""
        return all(e.passed for e in self.entries if e.multiplicativity)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries if e.role is not AxiomRole.REPORT_ONLY)

    @property
    def failed_axioms(self) -> List[str]:
        return [e.axiom_id for e in self.entries if not e.passed]

    def entry(self, axiom_id: str) -> AxiomEntry:
        for e in self.entries:
            if e.axiom_id == axiom_id:
                return e
        raise KeyError(axiom_id)

    def verdicts(self) -> Dict[str, bool]:
        return {e.axiom_id: e.passed for e in self.entries}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "multiplicative": self.multiplicative,
            "entries": [e.to_dict() for e in self.entries],
            "notes": list(self.notes),
        }
