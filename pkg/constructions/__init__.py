"""
Construction rules: new structure packages built from old ones.

Constructors never check their own output; callers re-run the target
kind's checker on the result.

Usage:
    from constructions import ConstructionRule, get_registry, yau_twist

    twisted = yau_twist(package, beta)
    lie = get_registry().apply(ConstructionRule("commutator_cobracket"), package)
"""

from .derived import (
    RbTarget,
    anticommutator,
    commutator,
    commutator_cobracket,
    dendriform_to_prelie,
    postpoisson_to_homopoisson,
    rb_coassoc_derive,
    tridend_sum,
    tridend_to_dendriform,
    tridend_to_posthomlie,
)
from .errors import (
    ConstructionError,
    EnumerationTooLarge,
    InvalidParameter,
    NotCocommutative,
    NotEndomorphism,
    NotMultiplicative,
    SingularTwist,
    UnknownRule,
    UnsupportedKind,
    WeightMismatch,
)
from .posthomlie import (
    Le1Report,
    PostHomLieTarget,
    admissible,
    admissible_comultiplication,
    le1_report,
    permute_basis,
    posthomlie_derive,
    rb_homlie_to_posthomlie,
    sub_homlie,
    tensor_posthomlie,
    tilde,
)
from .registry import (
    ConstructionRegistry,
    ConstructionRule,
    ParamSpec,
    ParamType,
    RuleCategory,
    RuleInfo,
    get_registry,
    list_rule_ids,
    parse_endomorphism,
    parse_matrix,
)
from .twists import (
    TWISTABLE_KINDS,
    endomorphism_violations,
    find_endomorphisms,
    is_endomorphism,
    power_twist,
    yau_twist,
)

__all__ = [
    "yau_twist",
    "power_twist",
    "find_endomorphisms",
    "endomorphism_violations",
    "is_endomorphism",
    "TWISTABLE_KINDS",
    "commutator",
    "anticommutator",
    "commutator_cobracket",
    "tridend_sum",
    "tridend_to_dendriform",
    "rb_coassoc_derive",
    "RbTarget",
    "dendriform_to_prelie",
    "tridend_to_posthomlie",
    "postpoisson_to_homopoisson",
    "posthomlie_derive",
    "PostHomLieTarget",
    "Le1Report",
    "tilde",
    "admissible",
    "admissible_comultiplication",
    "le1_report",
    "sub_homlie",
    "rb_homlie_to_posthomlie",
    "tensor_posthomlie",
    "permute_basis",
    "ConstructionRegistry",
    "ConstructionRule",
    "RuleCategory",
    "RuleInfo",
    "ParamSpec",
    "ParamType",
    "get_registry",
    "list_rule_ids",
    "parse_matrix",
    "parse_endomorphism",
    "ConstructionError",
    "NotEndomorphism",
    "UnsupportedKind",
    "NotMultiplicative",
    "SingularTwist",
    "WeightMismatch",
    "NotCocommutative",
    "UnknownRule",
    "InvalidParameter",
    "EnumerationTooLarge",
]
