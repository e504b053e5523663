"""
Comodules over tridendriform and post-Hom-Lie coalgebras.

Usage:
    from comodules import check_comodule, regular_comodule, comodule_derive

    Cm = regular_comodule(post_hom_lie_package)
    assert check_comodule(Cm).passed
    twisted = comodule_derive(Cm, "twist_n0", {"n": 2})
"""

from .checker import (
    COMODULE_AXIOMS,
    LEG_ORDER_NOTES,
    ComoduleAxiom,
    check_comodule,
    comodule_axiom_ids,
    comodule_axiom_residual,
)
from .derive import (
    MAX_TWIST_EXPONENT,
    ComoduleRule,
    ZeroKExponent,
    comodule_derive,
    direct_sum,
    equivariance_violations,
    regular_comodule,
    tensor_comodule,
    twist_0k,
    twist_beta,
    twist_n0,
    twist_nk,
)
from .errors import (
    BaseMismatch,
    ComoduleError,
    ExponentOverflow,
    NotEquivariant,
    NotMultiplicative,
    UnknownComoduleRule,
)
from .schemas import (
    BASE_KIND,
    REGULAR_PAIRING,
    STRUCTURE_MAPS,
    ComoduleKind,
    ComodulePackage,
    comodule_kind_for,
)

__all__ = [
    "ComoduleKind",
    "ComodulePackage",
    "BASE_KIND",
    "STRUCTURE_MAPS",
    "REGULAR_PAIRING",
    "comodule_kind_for",
    "COMODULE_AXIOMS",
    "LEG_ORDER_NOTES",
    "ComoduleAxiom",
    "check_comodule",
    "comodule_axiom_ids",
    "comodule_axiom_residual",
    "ComoduleRule",
    "ZeroKExponent",
    "MAX_TWIST_EXPONENT",
    "comodule_derive",
    "direct_sum",
    "regular_comodule",
    "tensor_comodule",
    "twist_n0",
    "twist_0k",
    "twist_nk",
    "twist_beta",
    "equivariance_violations",
    "ComoduleError",
    "BaseMismatch",
    "NotMultiplicative",
    "NotEquivariant",
    "ExponentOverflow",
    "UnknownComoduleRule",
]
