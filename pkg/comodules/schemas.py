"""
Comodule packages: a space M with structure maps M -> L⊗M over a base coalgebra L.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, Mapping

from structures import KindMismatch, StructureKind, StructurePackage
from tensorcore import FieldSpec, SpaceId, TensorMap


class ComoduleKind(str, Enum):
    TRIDEND = "TridendComodule"
    POST_HOM_LIE = "PostHomLieComodule"


BASE_KIND: Dict[ComoduleKind, StructureKind] = {
    ComoduleKind.TRIDEND: StructureKind.HOM_TRIDENDRIFORM,
    ComoduleKind.POST_HOM_LIE: StructureKind.POST_HOM_LIE,
}

# Δ₋₁,M, Δ₀,M, Δ₁,M for tridendriform comodules; Δ⋄, Δ• for post-Hom-Lie ones
STRUCTURE_MAPS: Dict[ComoduleKind, tuple[str, ...]] = {
    ComoduleKind.TRIDEND: ("dm1", "d0", "d1"),
    ComoduleKind.POST_HOM_LIE: ("diamond", "bullet"),
}

# structure map paired with each base comap in the regular comodule
REGULAR_PAIRING: Dict[ComoduleKind, Dict[str, str]] = {
    ComoduleKind.TRIDEND: {"dm1": "delta_m1", "d0": "delta_0", "d1": "delta_1"},
    ComoduleKind.POST_HOM_LIE: {"diamond": "gamma", "bullet": "delta"},
}


def comodule_kind_for(base: StructurePackage) -> ComoduleKind:
    for kind, base_kind in BASE_KIND.items():
        if base.kind is base_kind:
            return kind
    raise KindMismatch(f"No comodules are defined over {base.kind.value}")


@dataclass(frozen=True)
class ComodulePackage:
    """
    A comodule (M, structure maps, α_M) over ``base``.

    Every structure map has domain M and codomain (L, M), where L is the
    base space; M and L must carry different names.
    """

    kind: ComoduleKind
    base: StructurePackage
    mspace: SpaceId
    alpha_m: TensorMap
    structure_maps: Mapping[str, TensorMap]

    def __post_init__(self):
        object.__setattr__(self, "kind", ComoduleKind(self.kind))
        object.__setattr__(self, "structure_maps", dict(sorted(self.structure_maps.items())))
        if self.base.kind is not BASE_KIND[self.kind]:
            raise KindMismatch(f"{self.kind.value} needs a {BASE_KIND[self.kind].value} base, "
                               f"got {self.base.kind.value}")
        if self.mspace.name == self.base.space.name:
            raise KindMismatch(f"Comodule space and base space share the name {self.mspace.name}")
        required = set(STRUCTURE_MAPS[self.kind])
        present = set(self.structure_maps)
        if present != required:
            raise KindMismatch(f"{self.kind.value}: missing structure maps {sorted(required - present)}, "
                               f"unexpected {sorted(present - required)}")
        if self.alpha_m.dom != self.mspace or self.alpha_m.cod != (self.mspace,):
            raise KindMismatch(f"alpha_m must be an endomorphism of {self.mspace}")
        for name, tensor in self.structure_maps.items():
            if tensor.dom != self.mspace or tensor.cod != (self.base.space, self.mspace):
                raise KindMismatch(f"Structure map {name} must map {self.mspace} -> "
                                   f"({self.base.space}, {self.mspace})")
        for tensor in (self.alpha_m, *self.structure_maps.values()):
            if tensor.field != self.base.field:
                raise KindMismatch(f"Comodule maps must live over {self.base.field}")

    @classmethod
    def zero(cls, base: StructurePackage, mspace: SpaceId) -> "ComodulePackage":
        """Comodule with every structure map zero and α_M the identity."""
        kind = comodule_kind_for(base)
        maps = {name: TensorMap.zeros(mspace, (base.space, mspace), base.field)
                for name in STRUCTURE_MAPS[kind]}
        return cls(kind, base, mspace, TensorMap.identity(mspace, base.field), maps)

    @property
    def field(self) -> FieldSpec:
        return self.base.field

    @property
    def dim(self) -> int:
        return self.mspace.dim

    def structure_map(self, name: str) -> TensorMap:
        try:
            return self.structure_maps[name]
        except KeyError:
            raise KindMismatch(f"{self.kind.value} has no structure map {name!r}") from None

    def maps(self) -> Dict[str, TensorMap]:
        return {"alpha_m": self.alpha_m, **self.structure_maps}

    def with_maps(self, **maps: Any) -> "ComodulePackage":
        """Copy with structure maps, ``alpha_m`` or ``base`` replaced."""
        alpha_m = maps.pop("alpha_m", self.alpha_m)
        base = maps.pop("base", self.base)
        return replace(self, base=base, alpha_m=alpha_m,
                       structure_maps={**self.structure_maps, **maps})

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self.structure_maps.values())

    def nonzero_count(self) -> int:
        return sum(t.nonzero_count() for t in self.maps().values())
