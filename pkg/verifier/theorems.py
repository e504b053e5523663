"""
Theorem registry.

Each entry states what a construction theorem claims in executable form:
the kind its witnesses must have (plus extra hypotheses), the construction
applied to them, and the kind the outputs must pass. Report-only entries
are evaluated the same way but only feed the discrepancy ledger.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from comodules import (
    ComoduleKind,
    ComodulePackage,
    ZeroKExponent,
    direct_sum,
    equivariance_violations,
    regular_comodule,
    tensor_comodule,
    twist_0k,
    twist_beta,
    twist_n0,
    twist_nk,
)
from constructions import (
    Le1Report,
    RbTarget,
    admissible,
    commutator_cobracket,
    dendriform_to_prelie,
    endomorphism_violations,
    find_endomorphisms,
    is_endomorphism,
    le1_report,
    postpoisson_to_homopoisson,
    power_twist,
    rb_coassoc_derive,
    rb_homlie_to_posthomlie,
    tensor_posthomlie,
    tilde,
    tridend_sum,
    tridend_to_posthomlie,
    yau_twist,
)
from structures import (
    StructureKind,
    StructurePackage,
    TridendriformAlgebra,
    dualize_algebra,
    opposite_tridend,
)
from tensorcore import TAU, TensorMap, identity, is_invertible, permute

from .errors import UnknownTheorem
from .file_format import ALGEBRA_KIND as TRIDEND_ALGEBRA

logger = logging.getLogger(__name__)

# candidate twist maps are only enumerated when p^(d*d) stays below this
TWIST_SEARCH_LIMIT = 4096

Hypothesis = Union[StructureKind, ComoduleKind, str]
Variant = Tuple[str, Any]
Subject = Union[StructurePackage, ComodulePackage, TridendriformAlgebra]


class WitnessSource(str, Enum):
    """Where a campaign draws its hypothesis witnesses from."""
    FIXTURES_AND_SEARCH = "fixtures+search"
    DERIVED = "derived"               # built from witnesses of other kinds


@dataclass(frozen=True)
class Theorem:
    """
    One registry entry.

    ``apply`` maps a hypothesis witness to named conclusion candidates;
    every candidate must pass the ``conclusion`` kind's check (and be
    multiplicative when ``conclusion_multiplicative``). ``extra_check``
    returns a failure label for conclusions that need more than a kind
    check.
    """
    id: str
    statement: str
    hypothesis: Hypothesis
    conclusion: Union[StructureKind, ComoduleKind]
    rule: str
    apply: Callable[[Subject, Any], List[Variant]]
    require_multiplicative: bool = False
    precondition: Optional[Callable[[Subject], bool]] = None
    precondition_text: str = ""
    conclusion_multiplicative: bool = False
    extra_check: Optional[Callable[[Any], Optional[str]]] = None
    ledger: Optional[Callable[[Any], Dict[str, Any]]] = None
    report_only: bool = False
    reason: str = ""
    witness_source: WitnessSource = WitnessSource.FIXTURES_AND_SEARCH
    epsilon_sensitive: bool = False

    @property
    def hypothesis_label(self) -> str:
        return self.hypothesis.value if isinstance(self.hypothesis, Enum) else str(self.hypothesis)


# -- hypotheses -----------------------------------------------------------

def is_multiplicative(S: StructurePackage) -> bool:
    return not endomorphism_violations(S, S.alpha)


def alpha_is_identity(S: StructurePackage) -> bool:
    return S.alpha == identity(S.space, S.field)


def base_multiplicative(Cm: ComodulePackage) -> bool:
    return is_multiplicative(Cm.base)


def weight_is(value: int) -> Callable[[StructurePackage], bool]:
    return lambda S: S.rb.weight == S.field.scalar(value)


def odd_characteristic(S: StructurePackage) -> bool:
    return S.field.characteristic != 2


def invertible_multiplicative(S: StructurePackage) -> bool:
    return is_multiplicative(S) and is_invertible(S.alpha)


# -- twist maps -----------------------------------------------------------

def twist_maps(S: StructurePackage, limit: int = 3) -> List[Tuple[str, TensorMap]]:
    """
    The identity plus up to ``limit`` further endomorphisms of ``S``.

    Over small prime fields they are enumerated; otherwise α itself is used
    when the package is multiplicative.
    """
    ident = identity(S.space, S.field)
    maps = [("id", ident)]
    if S.field.is_prime and S.field.p ** (S.dim * S.dim) <= TWIST_SEARCH_LIMIT:
        found = find_endomorphisms(S, limit=limit + 1)
        maps += [(f"beta{n}", beta) for n, beta in enumerate(found) if beta != ident]
    elif S.alpha != ident and is_endomorphism(S, S.alpha):
        maps.append(("alpha", S.alpha))
    return maps[:limit + 1]


def _yau(S: StructurePackage, ctx: Any) -> List[Variant]:
    return [(f"yau_{label}", yau_twist(S, beta)) for label, beta in twist_maps(S)]


def _powers(S: StructurePackage, ctx: Any) -> List[Variant]:
    return [(f"n={n}", power_twist(S, n)) for n in (1, 2)]


def _untwist(S: StructurePackage, ctx: Any) -> List[Variant]:
    return [("inverse", power_twist(S, 1, inverse=True))]


def _alpha_identity_check(S: StructurePackage) -> Optional[str]:
    return None if alpha_is_identity(S) else "alpha!=id"


def _rb(target: RbTarget) -> Callable[[StructurePackage, Any], List[Variant]]:
    return lambda S, ctx: [(target.value, rb_coassoc_derive(S, target))]


def _single(name: str, build: Callable[[Any], Any]) -> Callable[[Any, Any], List[Variant]]:
    return lambda S, ctx: [(name, build(S))]


def _tensor(P: StructurePackage, ctx: Any) -> List[Variant]:
    factors = ctx.auxiliary(StructureKind.HOM_COASSOC, P.field)
    return [(f"with_{w.name}", tensor_posthomlie(P, w.package)) for w in factors]


def _le1_ledger(report: Le1Report) -> Dict[str, Any]:
    return report.to_dict()


# -- comodule rules -------------------------------------------------------

def _regular(base: StructurePackage, ctx: Any) -> List[Variant]:
    return [(f"k={k}", regular_comodule(base, k)) for k in (0, 1, 2)]


def _sums(Cm: ComodulePackage, ctx: Any) -> List[Variant]:
    zero = ComodulePackage.zero(Cm.base, Cm.mspace)
    return [("with_self", direct_sum(Cm, Cm)), ("with_zero", direct_sum(Cm, zero))]


def _tensors(Cm: ComodulePackage, ctx: Any) -> List[Variant]:
    return [(f"k={k}", tensor_comodule(Cm, Cm, k)) for k in (0, 1)]


def _n0(Cm: ComodulePackage, ctx: Any) -> List[Variant]:
    return [(f"n={n}", twist_n0(Cm, n)) for n in (1, 2)]


def _zero_k(exponent: ZeroKExponent) -> Callable[[ComodulePackage, Any], List[Variant]]:
    return lambda Cm, ctx: [(f"k={k}", twist_0k(Cm, k, exponent)) for k in (1, 2)]


def _nk(Cm: ComodulePackage, ctx: Any) -> List[Variant]:
    return [("n=1,k=1", twist_nk(Cm, 1, 1))]


def twisting_pairs(Cm: ComodulePackage, limit: int = 3) -> List[Tuple[str, TensorMap, TensorMap]]:
    """(β, β_M) pairs satisfying the twisting equations, identity pair first."""
    field = Cm.field
    m_candidates = [("idM", identity(Cm.mspace, field)), ("alphaM", Cm.alpha_m)]
    if field.is_prime:
        m_candidates += [(f"{c}idM", TensorMap.scalar_multiple(Cm.mspace, field, c)) for c in range(2, min(field.p, 4))]
    pairs = []
    for label, beta in twist_maps(Cm.base):
        for m_label, beta_m in m_candidates:
            if not equivariance_violations(Cm, beta, beta_m):
                pairs.append((f"{label}/{m_label}", beta, beta_m))
                break
    return pairs[:limit]


def _beta(Cm: ComodulePackage, ctx: Any) -> List[Variant]:
    return [(label, twist_beta(Cm, beta, beta_m)) for label, beta, beta_m in twisting_pairs(Cm)]


# -- registry -------------------------------------------------------------

_K = StructureKind
_C = ComoduleKind

THEOREMS: Tuple[Theorem, ...] = (
    Theorem("T-ha1", "Yau twist of a coassociative coalgebra by an endomorphism is multiplicative Hom-coassociative",
            _K.HOM_COASSOC, _K.HOM_COASSOC, "yau_twist", _yau,
            precondition=alpha_is_identity, precondition_text="alpha = id",
            conclusion_multiplicative=True),
    Theorem("T-amb", "Yau twist of a Lie coalgebra by an endomorphism is multiplicative Hom-Lie",
            _K.HOM_LIE, _K.HOM_LIE, "yau_twist", _yau,
            precondition=alpha_is_identity, precondition_text="alpha = id",
            conclusion_multiplicative=True),
    Theorem("T-am1", "(1 - tau) Delta of a Hom-coassociative coalgebra is a Hom-Lie cobracket",
            _K.HOM_COASSOC, _K.HOM_LIE, "commutator_cobracket", _single("commutator", commutator_cobracket)),
    Theorem("T-ib", "The commutator coalgebra of a multiplicative Hom-coassociative coalgebra is multiplicative Hom-Lie",
            _K.HOM_COASSOC, _K.HOM_LIE, "commutator_cobracket", _single("commutator", commutator_cobracket),
            require_multiplicative=True, conclusion_multiplicative=True),
    Theorem("T-op", "The opposite of a Hom-tridendriform coalgebra is Hom-tridendriform",
            _K.HOM_TRIDENDRIFORM, _K.HOM_TRIDENDRIFORM, "opposite_tridend", _single("opposite", opposite_tridend)),
    Theorem("T-dual", "The dual of a finite-dimensional Hom-tridendriform algebra is a Hom-tridendriform coalgebra",
            TRIDEND_ALGEBRA, _K.HOM_TRIDENDRIFORM, "dualize", _single("dual", dualize_algebra),
            witness_source=WitnessSource.DERIVED),
    Theorem("T-tridend-twist", "Yau twist of a Hom-tridendriform coalgebra by an endomorphism",
            _K.HOM_TRIDENDRIFORM, _K.HOM_TRIDENDRIFORM, "yau_twist", _yau),
    Theorem("T-tridend-power", "Twisting a multiplicative Hom-tridendriform coalgebra by alpha^n",
            _K.HOM_TRIDENDRIFORM, _K.HOM_TRIDENDRIFORM, "power_twist", _powers,
            require_multiplicative=True, conclusion_multiplicative=True),
    Theorem("T-tridend-untwist", "Twisting by alpha^-1 gives a tridendriform coalgebra with identity twist",
            _K.HOM_TRIDENDRIFORM, _K.HOM_TRIDENDRIFORM, "power_twist", _untwist,
            precondition=invertible_multiplicative, precondition_text="multiplicative, alpha invertible",
            extra_check=_alpha_identity_check),
    Theorem("T-tridend-sum", "Delta_-1 + Delta_0 + Delta_1 is Hom-coassociative",
            _K.HOM_TRIDENDRIFORM, _K.HOM_COASSOC, "tridend_sum", _single("sum", tridend_sum)),
    Theorem("T-rb-tridend", "A Rota-Baxter operator splits Delta into a Hom-tridendriform coalgebra",
            _K.HOM_COASSOC_RB, _K.HOM_TRIDENDRIFORM, "rb_coassoc_derive", _rb(RbTarget.TRIDEND),
            witness_source=WitnessSource.DERIVED),
    Theorem("T-rb-dendriform", "A Rota-Baxter operator gives the dendriform pair (Delta_-1 + lambda Delta, Delta_1)",
            _K.HOM_COASSOC_RB, _K.HOM_DENDRIFORM, "rb_coassoc_derive", _rb(RbTarget.DENDRIFORM),
            witness_source=WitnessSource.DERIVED),
    Theorem("T-dend-prelie", "Delta_1 - tau Delta_-1 of a Hom-dendriform coalgebra is Hom-pre-Lie",
            _K.HOM_DENDRIFORM, _K.HOM_PRELIE, "dendriform_to_prelie", _single("prelie", dendriform_to_prelie)),
    Theorem("T-rb0-prelie", "A weight-0 Rota-Baxter operator gives a Hom-pre-Lie coalgebra",
            _K.HOM_COASSOC_RB, _K.HOM_PRELIE, "rb_coassoc_derive", _rb(RbTarget.PRELIE0),
            precondition=weight_is(0), precondition_text="weight 0",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-rbm1-prelie", "A weight -1 Rota-Baxter operator gives a Hom-pre-Lie coalgebra",
            _K.HOM_COASSOC_RB, _K.HOM_PRELIE, "rb_coassoc_derive", _rb(RbTarget.PRELIE_M1),
            precondition=weight_is(-1), precondition_text="weight -1",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-b-dendriform", "((I x B) Delta - Delta, (B x I) Delta + Delta) is Hom-dendriform",
            _K.HOM_COASSOC_RB, _K.HOM_DENDRIFORM, "rb_coassoc_derive", _rb(RbTarget.DENDRIFORM_B),
            report_only=True,
            reason="operator weight unstated; closes only when the extra Delta terms cancel",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com3-n0", "(alpha^n x Id_M) twist of a tridendriform comodule",
            _C.TRIDEND, _C.TRIDEND, "twist_n0", _n0,
            precondition=base_multiplicative, precondition_text="multiplicative base",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com3-0k", "alpha_M^(2^k-1) twist of a tridendriform comodule over the (2^k-1)-twisted base",
            _C.TRIDEND, _C.TRIDEND, "twist_0k", _zero_k(ZeroKExponent.POWER_MINUS_ONE),
            precondition=base_multiplicative, precondition_text="multiplicative base",
            report_only=True, reason="printed exponents disagree between the two comodule sections",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com3-nk", "Combined (alpha^n x Id_M) and alpha_M^(2^k) twist of a tridendriform comodule",
            _C.TRIDEND, _C.TRIDEND, "twist_nk", _nk,
            precondition=base_multiplicative, precondition_text="multiplicative base",
            report_only=True, reason="the combined statement is garbled in print",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-plc-twist", "Yau twist of a post-Hom-Lie coalgebra by an endomorphism",
            _K.POST_HOM_LIE, _K.POST_HOM_LIE, "yau_twist", _yau),
    Theorem("T-plc-tilde", "(Delta + gamma, -gamma) is again post-Hom-Lie",
            _K.POST_HOM_LIE, _K.POST_HOM_LIE, "posthomlie_derive", _single("tilde", tilde)),
    Theorem("T-plc-admissible", "Delta + gamma/2 is Hom-Lie admissible",
            _K.POST_HOM_LIE, _K.HOM_LIE, "posthomlie_derive", _single("admissible", admissible),
            precondition=odd_characteristic, precondition_text="characteristic != 2"),
    Theorem("L-le1", "Associator identity of Delta + gamma/2",
            _K.POST_HOM_LIE, _K.POST_HOM_LIE, "posthomlie_derive", _single("le1", le1_report),
            precondition=odd_characteristic, precondition_text="characteristic != 2",
            ledger=_le1_ledger, report_only=True,
            reason="statement and proof give different right-hand sides"),
    Theorem("T-rbl-post", "(lambda gamma, (R x I) gamma) of a Rota-Baxter Hom-Lie coalgebra is post-Hom-Lie",
            _K.HOM_LIE_RB, _K.POST_HOM_LIE, "rb_homlie_to_posthomlie", _single("post", rb_homlie_to_posthomlie),
            require_multiplicative=True, witness_source=WitnessSource.DERIVED),
    Theorem("T-plc-tensor", "C' x C is post-Hom-Lie for a cocommutative multiplicative Hom-coassociative C'",
            _K.POST_HOM_LIE, _K.POST_HOM_LIE, "tensor_posthomlie", _tensor),
    Theorem("T-tridend-post", "((1 - tau) Delta_0, Delta_1 - tau Delta_-1) of a Hom-tridendriform coalgebra",
            _K.HOM_TRIDENDRIFORM, _K.POST_HOM_LIE, "tridend_to_posthomlie", _single("post", tridend_to_posthomlie),
            report_only=True, reason="hypothesis reading depends on epsilon",
            epsilon_sensitive=True),
    Theorem("T-postpoisson", "Delta_A and Delta_R of a post-Hom-Poisson coalgebra form a Hom-Poisson coalgebra",
            _K.POST_HOM_POISSON, _K.HOM_POISSON, "postpoisson_to_homopoisson",
            _single("poisson", postpoisson_to_homopoisson),
            report_only=True, reason="hypothesis reading depends on epsilon",
            epsilon_sensitive=True),
    Theorem("T-com-sum", "Direct sum of two comodules over one post-Hom-Lie coalgebra",
            _C.POST_HOM_LIE, _C.POST_HOM_LIE, "direct_sum", _sums,
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com-regular", "(alpha^k x I) gamma and (alpha^k x I) Delta make L a comodule over itself",
            _K.POST_HOM_LIE, _C.POST_HOM_LIE, "regular_k", _regular,
            require_multiplicative=True),
    Theorem("T-com-tensor", "Tensor product of comodules over a multiplicative post-Hom-Lie coalgebra",
            _C.POST_HOM_LIE, _C.POST_HOM_LIE, "tensor_k", _tensors,
            precondition=base_multiplicative, precondition_text="multiplicative base",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com-n0", "(alpha^n x Id_M) twist of a post-Hom-Lie comodule",
            _C.POST_HOM_LIE, _C.POST_HOM_LIE, "twist_n0", _n0,
            precondition=base_multiplicative, precondition_text="multiplicative base",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com-0k", "alpha_M^(2^k) twist of a post-Hom-Lie comodule over the (2^k-1)-twisted base",
            _C.POST_HOM_LIE, _C.POST_HOM_LIE, "twist_0k", _zero_k(ZeroKExponent.POWER),
            precondition=base_multiplicative, precondition_text="multiplicative base",
            report_only=True, reason="comodule and base exponents differ as printed",
            witness_source=WitnessSource.DERIVED),
    Theorem("T-com-beta", "(beta x Id_M) Delta beta_M over the beta-twisted base",
            _C.POST_HOM_LIE, _C.POST_HOM_LIE, "twist_beta", _beta,
            witness_source=WitnessSource.DERIVED),
)

_BY_ID: Dict[str, Theorem] = {t.id: t for t in THEOREMS}


def get_theorem(theorem_id: str) -> Theorem:
    """
    Look up a theorem.

    Raises:
        UnknownTheorem: If the id is not registered
    """
    try:
        return _BY_ID[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"Unknown theorem {theorem_id!r}; known: {sorted(_BY_ID)}") from None


def theorem_ids(include_report_only: bool = True) -> List[str]:
    return [t.id for t in THEOREMS if include_report_only or not t.report_only]


def report_only_ids() -> List[str]:
    return [t.id for t in THEOREMS if t.report_only]


def cocommutative(S: StructurePackage) -> bool:
    delta = S.comap("delta")
    return delta == permute(TAU, delta)
