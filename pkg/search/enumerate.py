"""
Witness enumeration.

A search fixes a layout of free coefficients (one slot per map), turns each
candidate index into a coefficient vector and keeps the candidates that pass
every required axiom. Exhaustive mode walks the vectors in lexicographic
order; random mode seeds one generator per candidate index, so candidate i
is the same whatever else was drawn.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from comodules import COMODULE_AXIOMS, STRUCTURE_MAPS, ComodulePackage, check_comodule, comodule_kind_for
from structures import (
    RB_KINDS,
    REQUIRED_COMAPS,
    AxiomRole,
    CheckReport,
    EpsilonReading,
    RotaBaxter,
    StructureKind,
    StructurePackage,
    Terms,
    check_structure,
)
from structures.axioms import axiom_specs
from tensorcore import FieldSpec, SpaceId, TensorMap

from .config import AlphaConstraint, SearchConfig, SearchMode
from .errors import BudgetExceeded, GuardViolation

logger = logging.getLogger(__name__)

EXHAUSTIVE_SPACE_LIMIT = 2**36
RATIONAL_RANGE = (-3, 3)

# comaps drawn skew-cocommutative by construction
SKEW_COMAPS = {
    StructureKind.HOM_LIE: "gamma",
    StructureKind.HOM_LIE_RB: "gamma",
    StructureKind.POST_HOM_LIE: "gamma",
    StructureKind.HOM_POISSON: "gamma",
    StructureKind.POST_HOM_POISSON: "gamma",
}

Package = Union[StructurePackage, ComodulePackage]


@dataclass(frozen=True)
class Slot:
    """Free coefficients of one map; ``preset`` maps have none."""
    name: str
    dom: SpaceId
    cod: Tuple[SpaceId, ...]
    positions: Tuple[Tuple[int, ...], ...] = ()
    skew: bool = False
    preset: Optional[TensorMap] = None

    @property
    def count(self) -> int:
        return len(self.positions)

    def build(self, values: Sequence, field: FieldSpec) -> TensorMap:
        if self.preset is not None:
            return self.preset
        arr = np.zeros((self.dom.dim, *(s.dim for s in self.cod)), dtype=object)
        for (i, *rest), value in zip(self.positions, values):
            arr[(i, *rest)] = value
            if self.skew and rest[0] != rest[1]:
                arr[i, rest[1], rest[0]] = -value
        return TensorMap(self.dom, self.cod, arr, field)


@dataclass
class WitnessRecord:
    """A package that passed its checks, with where it came from."""
    package: Package
    seed: int
    index: int
    verdicts: CheckReport
    minimized: bool = False

    @property
    def kind(self) -> str:
        return self.package.kind.value

    @property
    def name(self) -> str:
        """``<kind>-d<dim>-<field>-<seed>-<index>``"""
        return f"{self.kind}-d{self.package.dim}-{self.package.field.label}-{self.seed}-{self.index}"


@dataclass
class SearchResult:
    """Witnesses of one search, in candidate order."""
    config: SearchConfig
    records: List[WitnessRecord] = field(default_factory=list)
    visited: int = 0
    total: Optional[int] = None
    budget_exceeded: bool = False

    def __iter__(self) -> Iterator[WitnessRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __getitem__(self, i: int) -> WitnessRecord:
        return self.records[i]


# -- layouts --------------------------------------------------------------

def _endo_positions(n: int, constraint: AlphaConstraint) -> Tuple[Tuple[int, int], ...]:
    if constraint is AlphaConstraint.DIAGONAL:
        return tuple((i, i) for i in range(n))
    return tuple((i, j) for i in range(n) for j in range(n))


def _pair_positions(dom: SpaceId, cod: Tuple[SpaceId, SpaceId], skew: bool,
                    field: FieldSpec) -> Tuple[Tuple[int, int, int], ...]:
    if not skew:
        return tuple((i, j, k) for i in range(dom.dim) for j in range(cod[0].dim) for k in range(cod[1].dim))
    diagonal_free = field.characteristic == 2
    n = cod[0].dim
    return tuple((i, j, k) for i in range(dom.dim) for j in range(n) for k in range(n)
                 if j < k or (diagonal_free and j == k))


def _alpha_slot(name: str, space: SpaceId, field: FieldSpec, cfg: SearchConfig) -> Slot:
    if name in cfg.fixed:
        return Slot(name, space, (space,), preset=cfg.fixed[name])
    if cfg.alpha is AlphaConstraint.IDENTITY:
        return Slot(name, space, (space,), preset=TensorMap.identity(space, field))
    return Slot(name, space, (space,), _endo_positions(space.dim, cfg.alpha))


def structure_layout(kind: StructureKind, space: SpaceId, field: FieldSpec,
                     cfg: SearchConfig) -> List[Slot]:
    """Slots of a structure search: α, the Rota-Baxter operator, then comaps."""
    slots = [_alpha_slot("alpha", space, field, cfg)]
    if kind in RB_KINDS:
        if "rb" in cfg.fixed:
            slots.append(Slot("rb", space, (space,), preset=cfg.fixed["rb"]))
        else:
            slots.append(Slot("rb", space, (space,), _endo_positions(space.dim, AlphaConstraint.FREE)))
    for name in REQUIRED_COMAPS[kind]:
        cod = (space, space)
        if name in cfg.fixed:
            slots.append(Slot(name, space, cod, preset=cfg.fixed[name]))
            continue
        skew = SKEW_COMAPS.get(kind) == name
        slots.append(Slot(name, space, cod, _pair_positions(space, cod, skew, field), skew))
    return slots


def comodule_layout(base: StructurePackage, mspace: SpaceId, cfg: SearchConfig) -> List[Slot]:
    """Slots of a comodule search over a fixed base: α_M, then structure maps."""
    field = base.field
    slots = [_alpha_slot("alpha_m", mspace, field, cfg)]
    for name in STRUCTURE_MAPS[comodule_kind_for(base)]:
        cod = (base.space, mspace)
        slots.append(Slot(name, mspace, cod, _pair_positions(mspace, cod, False, field)))
    return slots


def free_count(slots: Sequence[Slot]) -> int:
    return sum(slot.count for slot in slots)


def check_guards(cfg: SearchConfig, count: int) -> Optional[int]:
    """
    Validate the enumeration guards.

    Returns:
        The size of the search space in exhaustive mode, otherwise None

    Raises:
        GuardViolation: If exhaustive search is not possible for ``cfg``
    """
    if cfg.mode is not SearchMode.EXHAUSTIVE:
        return None
    field = cfg.field_spec
    if not field.is_prime:
        raise GuardViolation("Exhaustive search needs a finite field; use random mode over Q")
    limit = 3 * cfg.dim**3 + cfg.dim**2
    if count > limit:
        raise GuardViolation(f"{count} free coefficients exceed the exhaustive limit {limit}")
    total = field.p**count
    if total > EXHAUSTIVE_SPACE_LIMIT:
        raise GuardViolation(f"Search space {field.p}^{count} exceeds 2^36 candidates")
    return total


def exhaustive_size(cfg: SearchConfig) -> Optional[int]:
    """Candidates an exhaustive search of ``cfg``'s structure kind would visit; None if the guards refuse it."""
    exhaustive = cfg.model_copy(update={"mode": SearchMode.EXHAUSTIVE})
    slots = structure_layout(exhaustive.structure_kind, SpaceId("C", cfg.dim), exhaustive.field_spec, exhaustive)
    try:
        return check_guards(exhaustive, free_count(slots))
    except GuardViolation:
        return None


# -- candidates -----------------------------------------------------------

def _digits(index: int, base: int, count: int) -> List[int]:
    out = [0] * count
    for position in range(count - 1, -1, -1):
        index, out[position] = divmod(index, base)
    return out


def candidate_values(cfg: SearchConfig, index: int, count: int) -> List[int]:
    """Coefficient vector of candidate ``index``."""
    field = cfg.field_spec
    if cfg.mode is SearchMode.EXHAUSTIVE:
        return _digits(index, field.p, count)
    rng = np.random.default_rng([cfg.seed, index])
    if field.is_prime:
        values = rng.integers(0, field.p, size=count)
    else:
        low, high = RATIONAL_RANGE
        values = rng.integers(low, high + 1, size=count)
    if cfg.density < 1.0:
        values = np.where(rng.random(count) < cfg.density, values, 0)
    return [int(v) for v in values]


def _split(slots: Sequence[Slot], values: Sequence[int], field: FieldSpec) -> dict:
    maps, offset = {}, 0
    for slot in slots:
        maps[slot.name] = slot.build(values[offset:offset + slot.count], field)
        offset += slot.count
    return maps


def assemble_structure(kind: StructureKind, space: SpaceId, field: FieldSpec, slots: Sequence[Slot],
                       values: Sequence[int], rb_weight: str = "1") -> StructurePackage:
    maps = _split(slots, values, field)
    alpha = maps.pop("alpha")
    rb = None
    if "rb" in maps:
        rb = RotaBaxter(maps.pop("rb"), field.scalar(rb_weight))
    return StructurePackage(kind, space, field, alpha, maps, rb)


def assemble_comodule(base: StructurePackage, mspace: SpaceId, slots: Sequence[Slot],
                      values: Sequence[int]) -> ComodulePackage:
    maps = _split(slots, values, base.field)
    alpha_m = maps.pop("alpha_m")
    return ComodulePackage(comodule_kind_for(base), base, mspace, alpha_m, maps)


# -- verdicts -------------------------------------------------------------

def quick_passes(S: Package, require_multiplicative: bool = False,
                 epsilon: EpsilonReading = EpsilonReading.XI) -> bool:
    """Required-axiom verdict that stops at the first failing axiom."""
    def wanted(role: AxiomRole, multiplicativity: bool) -> bool:
        return role is AxiomRole.REQUIRED or (require_multiplicative and multiplicativity)

    if isinstance(S, ComodulePackage):
        for axiom in COMODULE_AXIOMS[S.kind]:
            if wanted(axiom.role, axiom.multiplicativity) and not axiom.build(S).is_zero():
                return False
        return True
    terms = Terms(S.alpha, epsilon)
    for spec in axiom_specs(S.kind):
        if wanted(spec.role, spec.multiplicativity) and not spec.build(S, terms).is_zero():
            return False
    return True


def full_report(S: Package, epsilon: EpsilonReading = EpsilonReading.XI) -> CheckReport:
    if isinstance(S, ComodulePackage):
        return check_comodule(S)
    return check_structure(S, epsilon=epsilon)


# -- search ---------------------------------------------------------------

def _run(cfg: SearchConfig, count: int, total: Optional[int], build, start_index: int,
         result: SearchResult, budget: int) -> bool:
    """Visit candidates in order; True if the budget cut the space short."""
    limit = budget if total is None else min(total, budget)
    for offset in range(limit):
        if cfg.max_witnesses is not None and len(result.records) >= cfg.max_witnesses:
            return False
        index = start_index + offset
        package = build(candidate_values(cfg, offset, count))
        result.visited += 1
        if package.is_zero() and not cfg.include_trivial:
            continue
        if not quick_passes(package, cfg.require_multiplicative, cfg.epsilon):
            continue
        logger.debug(f"Candidate {index} passes as {package.kind.value}")
        result.records.append(WitnessRecord(package, cfg.seed, index, full_report(package, cfg.epsilon)))
    return total is not None and total > budget


def _search_structures(cfg: SearchConfig) -> SearchResult:
    field = cfg.field_spec
    kind = cfg.structure_kind
    space = SpaceId("C", cfg.dim)
    slots = structure_layout(kind, space, field, cfg)
    count = free_count(slots)
    total = check_guards(cfg, count)
    result = SearchResult(cfg, total=total)
    result.budget_exceeded = _run(
        cfg, count, total,
        lambda values: assemble_structure(kind, space, field, slots, values, cfg.rb_weight),
        0, result, cfg.budget)
    return result


def _search_comodules(cfg: SearchConfig) -> SearchResult:
    base_cfg = cfg.model_copy(update={
        "kind": cfg.structure_kind,
        "max_witnesses": cfg.base_witnesses,
        "strict_budget": False,
    })
    bases = _search_structures(base_cfg).records
    result = SearchResult(cfg)
    if not bases:
        logger.warning(f"No {cfg.structure_kind.value} bases found for the comodule search")
        return result

    mspace = SpaceId("M", cfg.module_dim)
    remaining = cfg.budget
    for number, base in enumerate(bases):
        slots = comodule_layout(base.package, mspace, cfg)
        count = free_count(slots)
        total = check_guards(cfg, count)
        if result.total is None and total is not None:
            result.total = total * len(bases)
        start = len(result.records)
        visited_before = result.visited
        cut = _run(cfg, count, total,
                   lambda values, b=base.package: assemble_comodule(b, mspace, slots, values),
                   number * (total or cfg.budget), result, remaining)
        result.budget_exceeded = result.budget_exceeded or cut
        remaining -= result.visited - visited_before
        logger.debug(f"Base {base.name}: {len(result.records) - start} comodules")
        if remaining <= 0:
            result.budget_exceeded = result.budget_exceeded or (total is not None and number < len(bases) - 1)
            break
    return result


def enumerate_instances(cfg: SearchConfig) -> SearchResult:
    """
    Find witnesses of ``cfg.kind``.

    Args:
        cfg: Search parameters

    Returns:
        SearchResult: Witness records in candidate order, with the number
        of candidates visited and the budget flag

    Raises:
        GuardViolation: If exhaustive search is impossible for ``cfg``
        BudgetExceeded: If the budget runs out and ``cfg.strict_budget`` is set
    """
    logger.info(f"Searching {cfg.kind.value} d={cfg.dim} over {cfg.field} ({cfg.mode.value}, seed {cfg.seed})")
    if cfg.is_comodule:
        result = _search_comodules(cfg)
    else:
        result = _search_structures(cfg)

    logger.info(f"Found {len(result)} witnesses in {result.visited} candidates")
    if result.budget_exceeded:
        logger.warning(f"Budget of {cfg.budget} candidates exhausted before the search space")
        if cfg.strict_budget:
            raise BudgetExceeded(f"Visited {result.visited} of {result.total} candidates", partial=result)
    return result


# -- raw packages ---------------------------------------------------------

def random_raw_package(kind: StructureKind, dim: int, field: FieldSpec, seed: int,
                       index: int, space_name: str = "C") -> StructurePackage:
    """
    A package of ``kind`` with every coefficient drawn uniformly.

    No axiom is imposed, α and the Rota-Baxter operator are free; used to
    compare the checker against the componentwise oracle.
    """
    kind = StructureKind(kind)
    space = SpaceId(space_name, dim)
    cfg = SearchConfig(kind=kind, dim=dim, field=field.header, seed=seed, alpha=AlphaConstraint.FREE)
    slots = [_alpha_slot("alpha", space, field, cfg)]
    if kind in RB_KINDS:
        slots.append(Slot("rb", space, (space,), _endo_positions(dim, AlphaConstraint.FREE)))
    slots += [Slot(name, space, (space, space), _pair_positions(space, (space, space), False, field))
              for name in REQUIRED_COMAPS[kind]]
    count = free_count(slots)
    values = candidate_values(cfg, index, count + 1)
    return assemble_structure(kind, space, field, slots, values[:count], str(values[count]))


def random_raw_comodule(base: StructurePackage, module_dim: int, seed: int, index: int) -> ComodulePackage:
    """Comodule maps over ``base`` with every coefficient drawn uniformly."""
    cfg = SearchConfig(kind=base.kind, dim=base.dim, field=base.field.header, seed=seed,
                       alpha=AlphaConstraint.FREE)
    mspace = SpaceId("M", module_dim)
    slots = comodule_layout(base, mspace, cfg)
    return assemble_comodule(base, mspace, slots, candidate_values(cfg, index, free_count(slots)))
