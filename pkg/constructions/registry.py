"""
Construction rule registry.

Every construction is registered under a stable id together with the kinds
it accepts, the kind it produces and the parameters it needs, so the CLI and
the theorem campaigns look rules up by name instead of importing them.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from structures import StructureKind, StructurePackage, opposite_tridend
from tensorcore import FieldSpec, SpaceId, TensorMap

from .derived import (
    RbTarget,
    commutator_cobracket,
    dendriform_to_prelie,
    postpoisson_to_homopoisson,
    rb_coassoc_derive,
    tridend_sum,
    tridend_to_dendriform,
    tridend_to_posthomlie,
)
from .errors import InvalidParameter, UnknownRule
from .posthomlie import (
    PostHomLieTarget,
    posthomlie_derive,
    rb_homlie_to_posthomlie,
    tensor_posthomlie,
)
from .twists import TWISTABLE_KINDS, power_twist, yau_twist

logger = logging.getLogger(__name__)


class RuleCategory(Enum):
    """Families of construction rules."""
    TWIST = "twist"
    DERIVE = "derive"
    POST_HOM_LIE = "post_hom_lie"
    ALL = "all"


class ParamType(str, Enum):
    INT = "int"
    BOOL = "bool"
    SCALAR = "scalar"
    MAP = "map"
    CHOICE = "choice"


@dataclass(frozen=True)
class ParamSpec:
    """One named rule parameter."""
    name: str
    type: ParamType
    required: bool = False
    default: Any = None
    choices: Tuple[str, ...] = ()
    description: str = ""


@dataclass
class RuleInfo:
    """Information about a registered construction rule."""
    name: str
    category: RuleCategory
    description: str
    handler: Callable[..., Any]
    accepts: Tuple[StructureKind, ...]
    produces: Optional[StructureKind]
    params: Tuple[ParamSpec, ...] = ()
    needs_aux: bool = False


@dataclass
class ConstructionRule:
    """A rule id with its (raw or parsed) parameters."""
    id: str
    params: Dict[str, Any] = field(default_factory=dict)


def parse_matrix(text: str, package: StructurePackage) -> TensorMap:
    """
    Parse an arity-1 map written row by row: ``"1,0;0,2"``.

    Row i lists the coefficients of e_1..e_dim in f(e_i); ``diag:1,2`` is
    accepted as shorthand for a diagonal map.
    """
    return parse_endomorphism(text, package.space, package.field)


def parse_endomorphism(text: str, space: SpaceId, field: FieldSpec) -> TensorMap:
    """``parse_matrix`` for an explicit space and field."""
    dim = space.dim
    text = text.strip()
    try:
        if text.startswith("diag:"):
            values = [Fraction(v) for v in text[len("diag:"):].split(",")]
            if len(values) != dim:
                raise ValueError(f"expected {dim} diagonal entries")
            return TensorMap.diagonal(space, field, values)
        rows = [[Fraction(v) for v in row.split(",")] for row in text.split(";")]
        if len(rows) != dim or any(len(row) != dim for row in rows):
            raise ValueError(f"expected a {dim}x{dim} matrix")
        return TensorMap.from_matrix(space, field, rows)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidParameter(f"Malformed map {text!r}: {e}") from e


class ConstructionRegistry:
    """
    Registry of construction rules.

    Rules are looked up by id; ``apply`` validates the parameters against
    the rule's declaration before calling it.
    """

    def __init__(self):
        self._rules: Dict[str, RuleInfo] = {}
        self._initialize_rules()

    def _initialize_rules(self) -> None:
        logger.debug("Initializing construction registry")

        self._register_rule(
            "yau_twist", RuleCategory.TWIST, "Twist every comap by an endomorphism beta",
            lambda S, aux, beta: yau_twist(S, beta),
            accepts=tuple(sorted(TWISTABLE_KINDS, key=lambda k: k.value)), produces=None,
            params=(ParamSpec("beta", ParamType.MAP, required=True,
                              description="endomorphism rows, e.g. 1,0;0,2 or diag:1,2"),),
        )
        self._register_rule(
            "power_twist", RuleCategory.TWIST, "Twist a multiplicative package by alpha^n",
            lambda S, aux, n, inverse: power_twist(S, n, inverse),
            accepts=tuple(sorted(TWISTABLE_KINDS, key=lambda k: k.value)), produces=None,
            params=(ParamSpec("n", ParamType.INT, default=1, description="exponent"),
                    ParamSpec("inverse", ParamType.BOOL, default=False,
                              description="twist by the inverse power")),
        )
        self._register_rule(
            "commutator_cobracket", RuleCategory.DERIVE, "gamma = (1 - tau) delta",
            lambda S, aux: commutator_cobracket(S),
            accepts=(StructureKind.HOM_COASSOC,), produces=StructureKind.HOM_LIE,
        )
        self._register_rule(
            "tridend_sum", RuleCategory.DERIVE, "delta = delta_m1 + delta_0 + delta_1",
            lambda S, aux: tridend_sum(S),
            accepts=(StructureKind.HOM_TRIDENDRIFORM,), produces=StructureKind.HOM_COASSOC,
        )
        self._register_rule(
            "opposite_tridend", RuleCategory.DERIVE, "Opposite tridendriform coalgebra",
            lambda S, aux: opposite_tridend(S),
            accepts=(StructureKind.HOM_TRIDENDRIFORM,), produces=StructureKind.HOM_TRIDENDRIFORM,
        )
        self._register_rule(
            "tridend_to_dendriform", RuleCategory.DERIVE, "(delta_m1 + delta_0, delta_1)",
            lambda S, aux: tridend_to_dendriform(S),
            accepts=(StructureKind.HOM_TRIDENDRIFORM,), produces=StructureKind.HOM_DENDRIFORM,
        )
        self._register_rule(
            "rb_coassoc_derive", RuleCategory.DERIVE, "Split a Rota-Baxter Hom-coassociative coalgebra",
            lambda S, aux, target, weight: rb_coassoc_derive(S, target, weight),
            accepts=(StructureKind.HOM_COASSOC_RB,), produces=None,
            params=(ParamSpec("target", ParamType.CHOICE, required=True,
                              choices=tuple(t.value for t in RbTarget)),
                    ParamSpec("weight", ParamType.SCALAR,
                              description="expected operator weight (dendriform_B)")),
        )
        self._register_rule(
            "dendriform_to_prelie", RuleCategory.DERIVE, "delta = delta_1 - tau delta_m1",
            lambda S, aux: dendriform_to_prelie(S),
            accepts=(StructureKind.HOM_DENDRIFORM,), produces=StructureKind.HOM_PRELIE,
        )
        self._register_rule(
            "posthomlie_derive", RuleCategory.POST_HOM_LIE, "Tilde, admissible, associator report, sub Hom-Lie",
            lambda S, aux, target: posthomlie_derive(S, target),
            accepts=(StructureKind.POST_HOM_LIE,), produces=None,
            params=(ParamSpec("target", ParamType.CHOICE, required=True,
                              choices=tuple(t.value for t in PostHomLieTarget)),),
        )
        self._register_rule(
            "rb_homlie_to_posthomlie", RuleCategory.POST_HOM_LIE, "(lambda gamma, (R x I) gamma)",
            lambda S, aux: rb_homlie_to_posthomlie(S),
            accepts=(StructureKind.HOM_LIE_RB,), produces=StructureKind.POST_HOM_LIE,
        )
        self._register_rule(
            "tensor_posthomlie", RuleCategory.POST_HOM_LIE,
            "Post-Hom-Lie structure on C' x C (aux: cocommutative HomCoassoc C')",
            lambda S, aux: tensor_posthomlie(S, aux),
            accepts=(StructureKind.POST_HOM_LIE,), produces=StructureKind.POST_HOM_LIE,
            needs_aux=True,
        )
        self._register_rule(
            "tridend_to_posthomlie", RuleCategory.POST_HOM_LIE, "gamma = (1 - tau) delta_0, delta = delta_1 - tau delta_m1",
            lambda S, aux: tridend_to_posthomlie(S),
            accepts=(StructureKind.HOM_TRIDENDRIFORM,), produces=StructureKind.POST_HOM_LIE,
        )
        self._register_rule(
            "postpoisson_to_homopoisson", RuleCategory.POST_HOM_LIE, "Delta_A and Delta_R",
            lambda S, aux: postpoisson_to_homopoisson(S),
            accepts=(StructureKind.POST_HOM_POISSON,), produces=StructureKind.HOM_POISSON,
        )

        logger.debug(f"Registered {len(self._rules)} construction rules")

    def _register_rule(self, name: str, category: RuleCategory, description: str,
                       handler: Callable[..., Any], accepts: Tuple[StructureKind, ...],
                       produces: Optional[StructureKind], params: Tuple[ParamSpec, ...] = (),
                       needs_aux: bool = False) -> None:
        self._rules[name] = RuleInfo(name, category, description, handler,
                                     accepts, produces, params, needs_aux)

    def get_rule(self, name: str) -> RuleInfo:
        """
        Look up a rule by id.

        Raises:
            UnknownRule: If no rule has that id
        """
        info = self._rules.get(name)
        if info is None:
            raise UnknownRule(f"Unknown construction rule {name!r}; known: {sorted(self._rules)}")
        return info

    def list_rules(self, category: RuleCategory = RuleCategory.ALL) -> Dict[str, Dict[str, Any]]:
        rules = {}
        for name, info in sorted(self._rules.items()):
            if category is not RuleCategory.ALL and info.category is not category:
                continue
            rules[name] = {
                "category": info.category.value,
                "description": info.description,
                "accepts": [k.value for k in info.accepts],
                "produces": info.produces.value if info.produces else None,
                "params": [p.name for p in info.params],
                "needs_aux": info.needs_aux,
            }
        return rules

    def resolve_params(self, rule: ConstructionRule, S: StructurePackage) -> Dict[str, Any]:
        """
        Convert raw (string) parameters into the values the handler expects.

        Raises:
            InvalidParameter: On unknown, missing or malformed parameters
        """
        info = self.get_rule(rule.id)
        declared = {p.name: p for p in info.params}
        unknown = sorted(set(rule.params) - set(declared))
        if unknown:
            raise InvalidParameter(f"{rule.id} takes no parameters {unknown}")

        resolved: Dict[str, Any] = {}
        for name, spec in declared.items():
            if name not in rule.params:
                if spec.required:
                    raise InvalidParameter(f"{rule.id} requires parameter {name!r}")
                resolved[name] = spec.default
                continue
            resolved[name] = self._convert(spec, rule.params[name], S)
        return resolved

    @staticmethod
    def _convert(spec: ParamSpec, raw: Any, S: StructurePackage) -> Any:
        if not isinstance(raw, str):
            return raw
        try:
            if spec.type is ParamType.INT:
                return int(raw)
            if spec.type is ParamType.BOOL:
                if raw.lower() not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(f"not a boolean: {raw}")
                return raw.lower() in ("true", "1", "yes")
            if spec.type is ParamType.SCALAR:
                return S.field.scalar(raw)
            if spec.type is ParamType.MAP:
                return parse_matrix(raw, S)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidParameter(f"Parameter {spec.name}: {e}") from e
        if raw not in spec.choices:
            raise InvalidParameter(f"Parameter {spec.name} must be one of {list(spec.choices)}")
        return raw

    def apply(self, rule: ConstructionRule, S: StructurePackage,
              aux: Optional[StructurePackage] = None) -> Any:
        """
        Run a rule on ``S`` (and ``aux`` when the rule needs a second package).

        Returns:
            The constructed package, or a report object for report rules
        """
        info = self.get_rule(rule.id)
        if info.needs_aux and aux is None:
            raise InvalidParameter(f"{rule.id} needs an auxiliary package")
        params = self.resolve_params(rule, S)
        logger.debug(f"Applying {rule.id} to {S.kind.value} with {sorted(params)}")
        return info.handler(S, aux, **params)


_registry: Optional[ConstructionRegistry] = None


def get_registry() -> ConstructionRegistry:
    """The shared construction registry."""
    global _registry
    if _registry is None:
        _registry = ConstructionRegistry()
    return _registry


def list_rule_ids() -> List[str]:
    return sorted(get_registry().list_rules())
