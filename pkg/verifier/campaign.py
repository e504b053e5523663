"""
Theorem campaigns.

A campaign collects hypothesis witnesses (handcrafted fixtures, packages
derived from witnesses of other kinds, and search results), applies the
theorem's construction to each, and checks the conclusion. Failures of
proved theorems are minimized and stored as counterexample files; report-only
theorems feed the discrepancy ledger instead.
"""

import logging
import re
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from comodules import (
    BASE_KIND,
    ComoduleError,
    ComoduleKind,
    ComodulePackage,
    check_comodule,
    direct_sum,
    regular_comodule,
)
from constructions import (
    ConstructionError,
    Le1Report,
    RbTarget,
    rb_coassoc_derive,
    rb_homlie_to_posthomlie,
    tridend_to_dendriform,
)
from search import (
    AlphaConstraint,
    GuardViolation,
    SearchConfig,
    SearchMode,
    WitnessRecord,
    enumerate_instances,
    exhaustive_size,
    full_report,
    minimize_witness,
    quick_passes,
)
from structures import (
    AxiomRole,
    EpsilonReading,
    RotaBaxter,
    StructureError,
    StructureKind,
    StructurePackage,
    TridendriformAlgebra,
    check_algebra,
    check_structure,
    codualize,
)
from tensorcore import FieldSpec, SpaceId, TensorCoreError, TensorMap

from .config import EngineConfig, get_development_config
from .errors import NoWitnessesFound, StructureFileError
from .file_format import FILE_SUFFIX, canonical_key, emit_structure_file, load_structure_file
from .theorems import (
    TRIDEND_ALGEBRA,
    Hypothesis,
    Subject,
    Theorem,
    cocommutative,
    get_theorem,
    is_multiplicative,
)

logger = logging.getLogger(__name__)

# errors a construction may raise on a witness it cannot handle
DERIVATION_ERRORS = (ConstructionError, ComoduleError, StructureError, TensorCoreError)

# Rota-Baxter weights tried when deriving λ-weighted operators R = -λ·id
SCALAR_RB_WEIGHTS = (1, -1)


@dataclass(frozen=True)
class Witness:
    """A hypothesis package with a stable name."""
    name: str
    package: Subject
    source: str = "search"


class TrialOutcome(BaseModel):
    """Result of one witness."""
    witness: str = Field(description="Witness name")
    source: str = Field(default="search", description="fixture, derived or search")
    passed: bool = Field(description="Every conclusion candidate passed")
    variants: Dict[str, bool] = Field(default_factory=dict, description="Verdict per conclusion candidate")
    failures: Dict[str, Dict[str, Optional[int]]] = Field(
        default_factory=dict, description="Variant -> failing axiom -> first failing basis index")
    details: Dict[str, Any] = Field(default_factory=dict, description="Extra values recorded for the ledger")


class Counterexample(BaseModel):
    """A (minimized) witness refuting a proved theorem."""
    name: str
    witness: str
    variants: List[str] = Field(default_factory=list)
    text: str = Field(description="Canonical structure file")


class LedgerEntry(BaseModel):
    """One discrepancy ledger line."""
    theorem: str
    witness: str
    values: Dict[str, str] = Field(default_factory=dict)

    def line(self) -> str:
        pairs = " ".join(f"{key}={value}" for key, value in self.values.items())
        return f"{self.theorem} {self.witness} {pairs}".rstrip()


class CampaignReport(BaseModel):
    """Everything one ``verify_theorem`` call found."""
    theorem: str
    statement: str
    hypothesis: str
    conclusion: str
    rule: str
    report_only: bool = False
    reason: str = ""
    field: str
    dim: int
    seed: int
    epsilon: EpsilonReading
    trials_requested: int
    outcomes: List[TrialOutcome] = Field(default_factory=list)
    counterexamples: List[Counterexample] = Field(default_factory=list)
    ledger: List[LedgerEntry] = Field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def witnesses(self) -> int:
        return len(self.outcomes)

    @property
    def passed(self) -> int:
        return sum(1 for o in self.outcomes if o.passed)

    @property
    def failed(self) -> int:
        return self.witnesses - self.passed

    @property
    def pass_rate(self) -> float:
        return self.passed / self.witnesses if self.outcomes else 0.0

    @property
    def refuted(self) -> bool:
        return not self.report_only and self.failed > 0


def _format(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return re.sub(r"\s+", "_", str(value)) or "-"


def _is_trivial(package: Subject) -> bool:
    if isinstance(package, TridendriformAlgebra):
        return all(not table.any() for table in package.products.values())
    return package.is_zero()


def _label(kind: Hypothesis) -> str:
    return getattr(kind, "value", kind)


def _kind_of(package: Subject) -> str:
    return TRIDEND_ALGEBRA if isinstance(package, TridendriformAlgebra) else package.kind.value


# -- witness pools --------------------------------------------------------

class WitnessPools:
    """
    Hypothesis witnesses per kind, built lazily and cached.

    Every pooled witness passes its kind's required axioms under the
    configured ε reading; duplicates (equal canonical files) are dropped and
    zero packages sort last.
    """

    def __init__(self, field: FieldSpec, dim: int, seed: int, engine: EngineConfig,
                 epsilon: EpsilonReading, limit: int):
        self.field = field
        self.dim = dim
        self.seed = seed
        self.engine = engine
        self.epsilon = epsilon
        self.limit = limit
        self._pools: Dict[str, List[Witness]] = {}
        self._fixtures: Optional[List[Witness]] = None

    def holds(self, package: Subject, epsilon: Optional[EpsilonReading] = None) -> bool:
        """The hypothesis check for ``package``'s own kind."""
        if isinstance(package, TridendriformAlgebra):
            return check_algebra(package).passed
        return quick_passes(package, epsilon=epsilon or self.epsilon)

    def fixtures(self) -> List[Witness]:
        if self._fixtures is None:
            self._fixtures = []
            directory = self.engine.fixtures_dir
            for path in sorted(directory.glob(f"*{FILE_SUFFIX}")) if directory.is_dir() else []:
                try:
                    package = load_structure_file(path)
                except (StructureFileError, StructureError, ComoduleError) as e:
                    logger.warning(f"Skipping fixture {path.name}: {e}")
                    continue
                self._fixtures.append(Witness(path.stem, package, "fixture"))
            logger.debug(f"Loaded {len(self._fixtures)} fixtures from {directory}")
        return self._fixtures

    def get(self, kind: Hypothesis) -> List[Witness]:
        label = _label(kind)
        if label in self._pools:
            return self._pools[label]
        self._pools[label] = []  # guards against derivation cycles

        candidates = [w for w in self.fixtures() if _kind_of(w.package) == label]
        candidates += self._derived(kind)
        candidates += self._searched(kind)

        seen = set()
        pool = []
        for witness in candidates:
            key = canonical_key(witness.package)
            if key in seen or not self.holds(witness.package):
                continue
            seen.add(key)
            pool.append(witness)
        pool.sort(key=lambda w: _is_trivial(w.package))
        logger.info(f"Witness pool for {label}: {len(pool)} packages")
        self._pools[label] = pool
        return pool

    def auxiliary(self, kind: StructureKind, field: FieldSpec, count: int = 2) -> List[Witness]:
        """Cocommutative multiplicative packages of ``kind`` over ``field`` for tensor products."""
        factors = [w for w in self.get(kind)
                   if w.package.field == field and w.package.dim <= 2 and not w.package.is_zero()
                   and cocommutative(w.package) and is_multiplicative(w.package)]
        if not factors:
            space = SpaceId("D", 1)
            delta = TensorMap.from_rows(space, (space, space), field, {1: [(1, (1, 1))]})
            unit = StructurePackage(kind, space, field, TensorMap.identity(space, field), {"delta": delta})
            factors = [Witness("grouplike", unit, "derived")]
        return factors[:count]

    # -- sources ---------------------------------------------------------

    def _derive_each(self, kind: Hypothesis, tag: str, build: Callable[[Any], Any],
                     keep: Callable[[Any], bool] = lambda package: True) -> List[Witness]:
        out = []
        for witness in self.get(kind):
            if not keep(witness.package):
                continue
            try:
                out.append(Witness(f"{witness.name}~{tag}", build(witness.package), "derived"))
            except DERIVATION_ERRORS as e:
                logger.debug(f"Cannot derive {tag} from {witness.name}: {e}")
        return out

    def _derived(self, kind: Hypothesis) -> List[Witness]:
        K = StructureKind
        if kind in (K.HOM_COASSOC_RB, K.HOM_LIE_RB):
            source = K.HOM_COASSOC if kind is K.HOM_COASSOC_RB else K.HOM_LIE
            out = []
            for weight in SCALAR_RB_WEIGHTS:
                out += self._derive_each(source, f"rb{weight}", lambda S, w=weight: _scalar_rb(S, kind, w))
            return out
        if kind is K.HOM_TRIDENDRIFORM:
            return self._derive_each(K.HOM_COASSOC_RB, "tridend",
                                     lambda S: rb_coassoc_derive(S, RbTarget.TRIDEND))
        if kind is K.HOM_DENDRIFORM:
            return (self._derive_each(K.HOM_TRIDENDRIFORM, "dend", tridend_to_dendriform)
                    + self._derive_each(K.HOM_COASSOC_RB, "dend",
                                        lambda S: rb_coassoc_derive(S, RbTarget.DENDRIFORM)))
        if kind is K.POST_HOM_LIE:
            return self._derive_each(K.HOM_LIE_RB, "post", rb_homlie_to_posthomlie, keep=is_multiplicative)
        if kind == TRIDEND_ALGEBRA:
            return self._derive_each(K.HOM_TRIDENDRIFORM, "dual", codualize)
        if isinstance(kind, ComoduleKind):
            return self._comodules(kind)
        return []

    def _comodules(self, kind: ComoduleKind) -> List[Witness]:
        out = []
        for witness in self.get(BASE_KIND[kind])[:self.limit]:
            base = witness.package
            try:
                regular = regular_comodule(base)
                zero = ComodulePackage.zero(base, SpaceId("M", 1))
                out += [
                    Witness(f"{witness.name}~regular", regular, "derived"),
                    Witness(f"{witness.name}~regular+zero", direct_sum(regular, zero), "derived"),
                    Witness(f"{witness.name}~zero", zero, "derived"),
                ]
            except DERIVATION_ERRORS as e:
                logger.debug(f"No comodules derived from {witness.name}: {e}")
        return out

    def search_configs(self, kind: Hypothesis) -> List[SearchConfig]:
        """
        The searches run for ``kind``.

        Over F_p a space whose exhaustive size fits the exhaustive budget is
        enumerated in full (always in dimension 1); larger spaces and Q are
        sampled at random.
        """
        if kind == TRIDEND_ALGEBRA:
            return []
        weights = ("1", "0", "-1") if kind in (StructureKind.HOM_COASSOC_RB, StructureKind.HOM_LIE_RB) else ("1",)
        common = dict(kind=kind, field=self.field.label, seed=self.seed, epsilon=self.epsilon,
                      max_witnesses=self.limit)
        configs = []
        for weight in weights:
            # comodule searches also search their bases; dimension 1 keeps them cheap
            top = 1 if isinstance(kind, ComoduleKind) else self.dim
            for dim in range(1, top + 1):
                if dim == 1 and self.field.is_prime:
                    configs.append(SearchConfig(dim=1, mode=SearchMode.EXHAUSTIVE, alpha=AlphaConstraint.DIAGONAL,
                                                budget=self.engine.exhaustive_budget, rb_weight=weight, **common))
                    continue
                for alpha in (AlphaConstraint.IDENTITY, AlphaConstraint.DIAGONAL):
                    cfg = SearchConfig(dim=dim, mode=SearchMode.RANDOM, alpha=alpha, budget=self.engine.search_budget,
                                       density=self.engine.search_density, rb_weight=weight, **common)
                    if self._fits_exhaustive(cfg):
                        cfg = cfg.model_copy(update={"mode": SearchMode.EXHAUSTIVE,
                                                     "budget": self.engine.exhaustive_budget})
                    configs.append(cfg)
        return configs

    def _fits_exhaustive(self, cfg: SearchConfig) -> bool:
        if cfg.is_comodule or not self.field.is_prime:
            return False
        size = exhaustive_size(cfg)
        return size is not None and size <= self.engine.exhaustive_budget

    def _searched(self, kind: Hypothesis) -> List[Witness]:
        out = []
        for cfg in self.search_configs(kind):
            try:
                result = enumerate_instances(cfg)
            except GuardViolation as e:
                logger.debug(f"Skipping search {cfg.mode.value} dim {cfg.dim}: {e}")
                continue
            tag = f"{cfg.alpha.value}-w{cfg.rb_weight}" if cfg.rb_weight != "1" else cfg.alpha.value
            out += [Witness(f"{record.name}-{tag}", record.package, "search") for record in result]
        return out


def _scalar_rb(S: StructurePackage, kind: StructureKind, weight: int) -> StructurePackage:
    """R = -λ·id is a Rota-Baxter operator of weight λ on any coalgebra."""
    operator = TensorMap.scalar_multiple(S.space, S.field, -weight)
    return StructurePackage(kind, S.space, S.field, S.alpha, S.comaps, RotaBaxter(operator, S.field.scalar(weight)))


# -- trials ---------------------------------------------------------------

class TrialContext:
    """What a theorem's ``apply`` may ask for besides the witness."""

    def __init__(self, pools: WitnessPools):
        self.pools = pools

    def auxiliary(self, kind: StructureKind, field: FieldSpec) -> List[Witness]:
        return self.pools.auxiliary(kind, field)


def conclusion_failures(theorem: Theorem, output: Any,
                        epsilon: EpsilonReading) -> Dict[str, Optional[int]]:
    """Failing axioms of one conclusion candidate (empty when it passes)."""
    if isinstance(output, Le1Report):
        return {} if output.matches_half else {"L=R1": None}
    if isinstance(output, ComodulePackage):
        report = check_comodule(output)
    elif isinstance(output, TridendriformAlgebra):
        report = check_algebra(output)
    else:
        report = check_structure(output, epsilon=epsilon)
    failures = {entry.axiom_id: entry.first_failing_basis_index for entry in report.entries
                if not entry.passed and (entry.role is AxiomRole.REQUIRED
                                         or (theorem.conclusion_multiplicative and entry.multiplicativity))}
    if theorem.extra_check is not None:
        label = theorem.extra_check(output)
        if label:
            failures[label] = None
    return failures


def applies_to(theorem: Theorem, package: Subject) -> bool:
    """Extra hypotheses beyond the kind's axioms."""
    if theorem.require_multiplicative and isinstance(package, StructurePackage) and not is_multiplicative(package):
        return False
    return theorem.precondition is None or theorem.precondition(package)


def run_trial(theorem: Theorem, witness: Witness, ctx: TrialContext,
              epsilon: EpsilonReading) -> Tuple[TrialOutcome, Dict[str, Any]]:
    """
    Apply the theorem to one witness.

    Returns:
        The outcome and the conclusion candidates keyed by variant label
    """
    try:
        variants = theorem.apply(witness.package, ctx)
    except DERIVATION_ERRORS as e:
        logger.warning(f"{theorem.id}: construction failed on {witness.name}: {e}")
        return TrialOutcome(witness=witness.name, source=witness.source, passed=False,
                            details={"error": type(e).__name__}), {}

    outcome = TrialOutcome(witness=witness.name, source=witness.source, passed=True)
    outputs = {}
    for label, output in variants:
        outputs[label] = output
        failures = conclusion_failures(theorem, output, epsilon)
        outcome.variants[label] = not failures
        if failures:
            outcome.failures[label] = failures
            outcome.passed = False
        if theorem.ledger is not None:
            prefix = f"{label}." if len(variants) > 1 else ""
            outcome.details.update({f"{prefix}{k}": v for k, v in theorem.ledger(output).items()})
    if not variants:
        outcome.details["variants"] = 0
    return outcome, outputs


def _ledger_entry(theorem: Theorem, outcome: TrialOutcome, witness: Witness, ctx: TrialContext,
                  record_both: bool) -> LedgerEntry:
    values = {"pass": _format(outcome.passed)}
    failed = sorted({axiom for failures in outcome.failures.values() for axiom in failures})
    values["failed"] = ",".join(failed) or "-"
    for key, value in outcome.details.items():
        values[key] = _format(value)
    if theorem.epsilon_sensitive and record_both:
        for reading in EpsilonReading:
            hypothesis = ctx.pools.holds(witness.package, reading)
            values[f"hyp_{reading.value}"] = _format(hypothesis)
            if hypothesis:
                variants = theorem.apply(witness.package, ctx)
                values[f"concl_{reading.value}"] = _format(
                    all(not conclusion_failures(theorem, out, reading) for _, out in variants))
    if not theorem.report_only and not outcome.passed:
        values["refuted"] = "true"
    return LedgerEntry(theorem=theorem.id, witness=witness.name, values=values)


def _safe_name(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9._~+-]", "_", text)


def _counterexample(theorem: Theorem, witness: Witness, outcome: TrialOutcome, ctx: TrialContext,
                    epsilon: EpsilonReading, minimize: bool, seed: int) -> Counterexample:
    package = witness.package
    if minimize and isinstance(package, (StructurePackage, ComodulePackage)):
        def refutes(candidate) -> bool:
            if not (ctx.pools.holds(candidate) and applies_to(theorem, candidate)):
                return False
            try:
                return not run_trial(theorem, Witness(witness.name, candidate), ctx, epsilon)[0].passed
            except DERIVATION_ERRORS:
                return False

        record = WitnessRecord(package, seed, 0, full_report(package, epsilon))
        package = minimize_witness(record, refutes).package
    return Counterexample(
        name=_safe_name(f"{theorem.id}-{witness.name}"),
        witness=witness.name,
        variants=sorted(outcome.failures),
        text=emit_structure_file(package),
    )


def select_witnesses(theorem: Theorem, pools: WitnessPools, trials: int) -> List[Witness]:
    return [w for w in pools.get(theorem.hypothesis) if applies_to(theorem, w.package)][:trials]


def verify_theorem(theorem_id: str, trials: Optional[int] = None, field: Optional[str] = None,
                   dim: Optional[int] = None, seed: Optional[int] = None,
                   engine: Optional[EngineConfig] = None, epsilon: Optional[EpsilonReading] = None,
                   pools: Optional[WitnessPools] = None) -> CampaignReport:
    """
    Run one theorem campaign.

    Args:
        theorem_id: Registry id, e.g. ``T-am1``
        trials: Witnesses to test (engine default otherwise)
        field: Search field label (``F5``, ``Q``, ...)
        dim: Largest search dimension
        seed: Search seed
        engine: Engine configuration
        epsilon: ε reading for post-Hom-Poisson checks
        pools: Shared witness pools, reused across campaigns

    Returns:
        CampaignReport with one outcome per witness

    Raises:
        UnknownTheorem: If the id is not registered
        NoWitnessesFound: If no witness satisfies the hypotheses
    """
    engine = engine or get_development_config()
    theorem = get_theorem(theorem_id)
    trials = trials or engine.trials
    field_spec = FieldSpec.parse(field or engine.default_field)
    dim = dim or engine.default_dim
    seed = engine.default_seed if seed is None else seed
    epsilon = EpsilonReading(epsilon or engine.epsilon_reading)
    if pools is None:
        pools = WitnessPools(field_spec, dim, seed, engine, epsilon, limit=trials)

    start = time.time()
    logger.info(f"Verifying {theorem.id} over {field_spec.label}, dim <= {dim}, {trials} trials")
    witnesses = select_witnesses(theorem, pools, trials)
    if not witnesses:
        hypotheses = ", ".join(filter(None, [theorem.hypothesis_label, theorem.precondition_text]))
        raise NoWitnessesFound(f"No witness satisfies the hypotheses of {theorem.id} ({hypotheses})", theorem.id)

    ctx = TrialContext(pools)
    report = CampaignReport(
        theorem=theorem.id, statement=theorem.statement, hypothesis=theorem.hypothesis_label,
        conclusion=theorem.conclusion.value, rule=theorem.rule, report_only=theorem.report_only,
        reason=theorem.reason, field=field_spec.label, dim=dim, seed=seed, epsilon=epsilon,
        trials_requested=trials,
    )
    for witness in witnesses:
        outcome, _ = run_trial(theorem, witness, ctx, epsilon)
        report.outcomes.append(outcome)
        if theorem.report_only or not outcome.passed:
            report.ledger.append(_ledger_entry(theorem, outcome, witness, ctx, engine.record_both_epsilon_readings))
        if not theorem.report_only and not outcome.passed:
            logger.error(f"{theorem.id} fails on {witness.name}: {outcome.failures}")
            report.counterexamples.append(_counterexample(
                theorem, witness, outcome, ctx, epsilon, engine.minimize_counterexamples, seed))

    report.runtime_seconds = time.time() - start
    level = logging.ERROR if report.refuted else logging.INFO
    logger.log(level, f"{theorem.id}: {report.passed}/{report.witnesses} witnesses passed")
    return report


def verify_all(theorem_ids: List[str], trials: Optional[int] = None, field: Optional[str] = None,
               dim: Optional[int] = None, seed: Optional[int] = None,
               engine: Optional[EngineConfig] = None) -> Tuple[List[CampaignReport], Dict[str, str]]:
    """
    Run several campaigns over shared witness pools.

    Returns:
        Reports of the campaigns that ran, and theorem id -> reason for those
        that found no witnesses
    """
    engine = engine or get_development_config()
    field_spec = FieldSpec.parse(field or engine.default_field)
    pools = WitnessPools(field_spec, dim or engine.default_dim,
                         engine.default_seed if seed is None else seed,
                         engine, engine.epsilon_reading, limit=trials or engine.trials)
    reports, skipped = [], {}
    for theorem_id in theorem_ids:
        try:
            reports.append(verify_theorem(theorem_id, trials, field, dim, seed, engine, pools=pools))
        except NoWitnessesFound as e:
            logger.warning(str(e))
            skipped[theorem_id] = str(e)
    return reports, skipped
