"""
Componentwise (Sweedler) oracle for every axiom.

Each axiom is written as a list of summands. A summand starts from a basis
vector x, expands structure maps leg by leg into explicit lists of
(coefficient, basis-index tuple) terms, e.g. Δ(x) = Σ x₍₁₎⊗x₍₂₎, and then
reorders legs. Nothing here goes through the array contractions of the
tensor calculus; the oracle only reads map rows.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from comodules import ComoduleKind, ComodulePackage
from structures import EpsilonReading, StructureKind, StructurePackage, UnknownAxiom
from tensorcore import FieldSpec, Scalar, SpaceId, TensorMap

logger = logging.getLogger(__name__)

# output leg t receives input leg source[t-1]
SWAP = (2, 1)
CYCLE = (2, 3, 1)      # x⊗y⊗z -> y⊗z⊗x
CYCLE2 = (3, 1, 2)
SWAP_FIRST = (2, 1, 3)
SWAP_LAST = (1, 3, 2)

Terms = Dict[Tuple[int, ...], Scalar]


@dataclass(frozen=True)
class Summand:
    """
    coef · perms ∘ (maps applied to legs) (x).

    ``ops`` are (leg, map name) pairs applied in order to the running
    element; ``coef`` may be the string ``"-weight"`` for
    −λ of the Rota-Baxter operator.
    """
    coef: Union[int, str]
    ops: Tuple[Tuple[int, str], ...]
    perms: Tuple[Tuple[int, ...], ...] = ()


def pair(coef, inner: str, h1: str, h2: str, *perms) -> Summand:
    """(h1⊗h2)∘inner"""
    ops = [(0, inner)]
    if h2 != "I":
        ops.append((1, h2))
    if h1 != "I":
        ops.append((0, h1))
    return Summand(coef, tuple(ops), tuple(perms))


def after(coef, outer: str, first: str) -> Summand:
    """outer∘first"""
    return Summand(coef, ((0, first), (0, outer)))


def single(coef, name: str, *perms) -> Summand:
    return Summand(coef, ((0, name),), tuple(perms))


@dataclass(frozen=True)
class OracleAxiom:
    arity: int
    summands: Tuple[Summand, ...]


@dataclass
class OracleResult:
    axiom_id: str
    passed: bool
    residual: TensorMap
    summands_evaluated: int


# -- expansion ------------------------------------------------------------

def _expand(element: Terms, leg: int, tensor: TensorMap, field: FieldSpec) -> Terms:
    out: Terms = defaultdict(int)
    for index, c in element.items():
        for d, image in tensor.row(index[leg]):
            key = index[:leg] + image + index[leg + 1:]
            out[key] = field.add(out[key], field.mul(c, d))
    return {k: v for k, v in out.items() if v != 0}


def _reorder(element: Terms, source: Sequence[int]) -> Terms:
    return {tuple(index[s - 1] for s in source): c for index, c in element.items()}


def _evaluate(summand: Summand, i: int, maps: Dict[str, TensorMap], field: FieldSpec,
              weight: Scalar) -> Terms:
    element: Terms = {(i,): field.one}
    for leg, name in summand.ops:
        if name not in maps:
            # absent comaps (Δ₀ of a dendriform package) are zero
            return {}
        element = _expand(element, leg, maps[name], field)
    for source in summand.perms:
        element = _reorder(element, source)
    coef = field.neg(weight) if summand.coef == "-weight" else field.scalar(summand.coef)
    return {k: field.mul(coef, v) for k, v in element.items()}


# -- axiom tables ---------------------------------------------------------

def _coasso(d: str) -> OracleAxiom:
    # α(x₁)⊗x₂₁⊗x₂₂ − x₁₁⊗x₁₂⊗α(x₂)
    return OracleAxiom(3, (pair(1, d, "alpha", d), pair(-1, d, d, "alpha")))


def _multip(d: str) -> OracleAxiom:
    return OracleAxiom(2, (after(1, d, "alpha"), pair(-1, d, "alpha", "alpha")))


def _cocomm(d: str) -> OracleAxiom:
    return OracleAxiom(2, (single(1, d), single(-1, d, SWAP)))


def _skew(g: str) -> OracleAxiom:
    # x₁⊗x₂ + x₂⊗x₁
    return OracleAxiom(2, (single(1, g), single(1, g, SWAP)))


def _cojacobi(g: str) -> OracleAxiom:
    return OracleAxiom(3, (pair(1, g, "alpha", g), pair(1, g, "alpha", g, CYCLE),
                           pair(1, g, "alpha", g, CYCLE2)))


def _prelie(d: str) -> OracleAxiom:
    return OracleAxiom(3, (pair(1, d, d, "alpha"), pair(-1, d, "alpha", d),
                           pair(-1, d, d, "alpha", SWAP_FIRST), pair(1, d, "alpha", d, SWAP_FIRST)))


_RB_COMMUTE = OracleAxiom(1, (after(1, "rb", "alpha"), after(-1, "alpha", "rb")))


def _rb_weight(d: str) -> OracleAxiom:
    return OracleAxiom(2, (
        pair(1, d, "rb", "rb"),
        Summand(-1, ((0, "rb"), (0, d), (0, "rb"))),
        Summand(-1, ((0, "rb"), (0, d), (1, "rb"))),
        Summand("-weight", ((0, "rb"), (0, d))),
    ))


_SPLIT = ("delta_m1", "delta_1", "delta_0")

_TRIDEND = {
    "c1": OracleAxiom(3, (pair(1, "delta_m1", "delta_m1", "alpha"),
                          *(pair(-1, "delta_m1", "alpha", n) for n in _SPLIT))),
    "c2": OracleAxiom(3, (pair(1, "delta_m1", "delta_1", "alpha"), pair(-1, "delta_1", "alpha", "delta_m1"))),
    "c3": OracleAxiom(3, (pair(1, "delta_1", "alpha", "delta_1"),
                          *(pair(-1, "delta_1", n, "alpha") for n in _SPLIT))),
    "c4": OracleAxiom(3, (pair(1, "delta_0", "delta_m1", "alpha"), pair(-1, "delta_0", "alpha", "delta_1"))),
    "c5": OracleAxiom(3, (pair(1, "delta_0", "delta_1", "alpha"), pair(-1, "delta_1", "alpha", "delta_0"))),
    "c6": OracleAxiom(3, (pair(1, "delta_m1", "delta_0", "alpha"), pair(-1, "delta_0", "alpha", "delta_m1"))),
    "c7": OracleAxiom(3, (pair(1, "delta_0", "delta_0", "alpha"), pair(-1, "delta_0", "alpha", "delta_0"))),
}


def _d3(star: str, dot: str) -> OracleAxiom:
    return OracleAxiom(3, (pair(1, star, star, "alpha"), pair(1, star, star, "alpha", SWAP_FIRST),
                           pair(1, star, dot, "alpha"), pair(-1, star, "alpha", star)))


def _d4(star: str, dot: str) -> OracleAxiom:
    return OracleAxiom(3, (pair(1, dot, star, "alpha"), pair(-1, star, "alpha", dot)))


_DPLC3 = OracleAxiom(3, (pair(1, "delta", "alpha", "gamma"), pair(-1, "gamma", "delta", "alpha"),
                         pair(-1, "gamma", "alpha", "delta", SWAP_FIRST)))

_DPLC4 = OracleAxiom(3, (pair(1, "delta", "delta", "alpha"), pair(-1, "delta", "alpha", "delta"),
                         pair(-1, "delta", "delta", "alpha", SWAP_FIRST),
                         pair(1, "delta", "alpha", "delta", SWAP_FIRST),
                         pair(1, "delta", "gamma", "alpha")))


def _leibniz(g: str, prod: str) -> OracleAxiom:
    return OracleAxiom(3, (pair(1, g, "alpha", prod), pair(-1, prod, g, "alpha"),
                           pair(-1, prod, "alpha", g, SWAP_FIRST)))


def _poisson_extras(eps: Tuple[int, ...], eps2: Tuple[int, ...]) -> Dict[str, OracleAxiom]:
    return {
        "p2": OracleAxiom(3, (pair(1, "gamma", "alpha", "delta_star", SWAP_LAST),
                              pair(-1, "delta_star", "alpha", "gamma", eps2),
                              pair(1, "delta_ast", "alpha", "delta", eps))),
        "p3": OracleAxiom(3, (pair(1, "delta", "alpha", "delta_ast"), pair(-1, "delta_ast", "delta", "alpha"),
                              pair(-1, "delta_ast", "alpha", "delta", SWAP_FIRST))),
        "p4": OracleAxiom(3, (pair(1, "delta", "delta_star", "alpha", eps),
                              pair(1, "delta", "delta_star", "alpha", SWAP_LAST, eps2),
                              pair(1, "delta", "delta_ast", "alpha", eps),
                              pair(-1, "delta_ast", "delta", "alpha"),
                              pair(-1, "delta_ast", "alpha", "delta", SWAP_FIRST))),
        "p5": OracleAxiom(3, (pair(1, "delta", "alpha", "delta_star", SWAP_LAST),
                              pair(-1, "delta_star", "alpha", "delta", eps2),
                              pair(-1, "delta_star", "delta_ast", "alpha", SWAP_LAST),
                              pair(1, "delta_star", "delta", "alpha", eps2),
                              pair(-1, "delta_star", "gamma", "alpha", SWAP_LAST))),
    }


def _post_hom_lie() -> Dict[str, OracleAxiom]:
    return {
        "dplc1": _skew("gamma"),
        "dplc1-multip": _multip("gamma"),
        "dplc2": _cojacobi("gamma"),
        "dplc3": _DPLC3,
        "dplc4": _DPLC4,
        "multip-delta": _multip("delta"),
    }


def structure_table(kind: StructureKind, epsilon: EpsilonReading = EpsilonReading.XI) -> Dict[str, OracleAxiom]:
    """Sweedler forms of every axiom of ``kind``."""
    eps, eps2 = (CYCLE, CYCLE2) if EpsilonReading(epsilon) is EpsilonReading.XI else (CYCLE2, CYCLE)
    kind = StructureKind(kind)
    if kind is StructureKind.HOM_COASSOC:
        return {"coasso": _coasso("delta"), "multip": _multip("delta")}
    if kind is StructureKind.HOM_COASSOC_RB:
        return {"coasso": _coasso("delta"), "multip": _multip("delta"),
                "rb-commute": _RB_COMMUTE, "rb-weight": _rb_weight("delta")}
    if kind is StructureKind.HOM_LIE:
        return {"skew": _skew("gamma"), "cojacobi": _cojacobi("gamma"), "multip": _multip("gamma")}
    if kind is StructureKind.HOM_LIE_RB:
        return {"skew": _skew("gamma"), "cojacobi": _cojacobi("gamma"), "multip": _multip("gamma"),
                "rb-commute": _RB_COMMUTE, "rb-weight": _rb_weight("gamma")}
    if kind is StructureKind.HOM_PRELIE:
        return {"prelie": _prelie("delta"), "multip": _multip("delta")}
    if kind is StructureKind.HOM_DENDRIFORM:
        return {"c1": _TRIDEND["c1"], "c2": _TRIDEND["c2"], "c3": _TRIDEND["c3"],
                "multip-m1": _multip("delta_m1"), "multip-1": _multip("delta_1")}
    if kind is StructureKind.HOM_TRIDENDRIFORM:
        return {**_TRIDEND, "multip-m1": _multip("delta_m1"), "multip-0": _multip("delta_0"),
                "multip-1": _multip("delta_1")}
    if kind is StructureKind.COCOMM_HOM_TRIDENDRIFORM:
        return {"coasso": _coasso("delta"), "cocomm": _cocomm("delta"),
                "d3": _d3("delta_star", "delta"), "d4": _d4("delta_star", "delta"),
                "multip-star": _multip("delta_star"), "multip-dot": _multip("delta")}
    if kind is StructureKind.POST_HOM_LIE:
        return _post_hom_lie()
    if kind is StructureKind.HOM_POISSON:
        return {"skew": _skew("gamma"), "cojacobi": _cojacobi("gamma"), "coasso": _coasso("delta"),
                "cocomm": _cocomm("delta"), "p1": _leibniz("gamma", "delta"),
                "multip-gamma": _multip("gamma"), "multip-delta": _multip("delta")}
    return {
        **_post_hom_lie(),
        "chd-coasso": _coasso("delta_ast"),
        "chd-cocomm": _cocomm("delta_ast"),
        "chd-d3": _d3("delta_star", "delta_ast"),
        "chd-d4": _d4("delta_star", "delta_ast"),
        "chd-multip-star": _multip("delta_star"),
        "chd-multip-ast": _multip("delta_ast"),
        "p1": _leibniz("gamma", "delta_ast"),
        **_poisson_extras(eps, eps2),
    }


def _cc() -> Dict[str, OracleAxiom]:
    comodule_split = ("dm1", "d0", "d1")
    return {
        "cc1": OracleAxiom(3, (pair(1, "dm1", "delta_m1", "alpha_m"),
                               *(pair(-1, "dm1", "alpha", n) for n in comodule_split))),
        "cc2": OracleAxiom(3, (pair(1, "dm1", "delta_1", "alpha_m"), pair(-1, "d1", "alpha", "dm1"))),
        "cc3": OracleAxiom(3, (pair(1, "d1", "alpha", "d1"),
                               *(pair(-1, "d1", n, "alpha_m") for n in _SPLIT))),
        "cc4": OracleAxiom(3, (pair(1, "d0", "delta_m1", "alpha_m"), pair(-1, "d0", "alpha", "d1"))),
        "cc5": OracleAxiom(3, (pair(1, "d0", "delta_1", "alpha_m"), pair(-1, "d1", "alpha", "d0"))),
        "cc6": OracleAxiom(3, (pair(1, "dm1", "delta_0", "alpha_m"), pair(-1, "d0", "alpha", "dm1"))),
        "cc7": OracleAxiom(3, (pair(1, "d0", "delta_0", "alpha_m"), pair(-1, "d0", "alpha", "d0"))),
    }


def _ma() -> Dict[str, OracleAxiom]:
    def ma1(name: str) -> OracleAxiom:
        return OracleAxiom(2, (after(1, name, "alpha_m"), pair(-1, name, "alpha", "alpha_m")))

    return {
        "ma1-diamond": ma1("diamond"),
        "ma1-bullet": ma1("bullet"),
        "ma2": OracleAxiom(3, (pair(1, "diamond", "gamma", "alpha_m"), pair(-1, "diamond", "alpha", "diamond"),
                               pair(1, "diamond", "alpha", "diamond", SWAP_FIRST))),
        "ma3": OracleAxiom(3, (pair(1, "diamond", "delta", "alpha_m"), pair(-1, "bullet", "alpha", "diamond"),
                               pair(1, "diamond", "alpha", "bullet", SWAP_FIRST))),
        "ma4": OracleAxiom(3, (pair(1, "bullet", "gamma", "alpha_m"), pair(-1, "bullet", "alpha", "bullet"),
                               pair(1, "bullet", "alpha", "bullet", SWAP_FIRST),
                               pair(-1, "bullet", "delta", "alpha_m", SWAP_FIRST),
                               pair(1, "bullet", "delta", "alpha_m"))),
        "ma3-printed": OracleAxiom(3, (pair(1, "diamond", "delta", "alpha_m"), pair(-1, "bullet", "alpha", "diamond"),
                                       pair(1, "bullet", "alpha", "bullet", SWAP_FIRST))),
    }


def comodule_table(kind: ComoduleKind) -> Dict[str, OracleAxiom]:
    return _cc() if ComoduleKind(kind) is ComoduleKind.TRIDEND else _ma()


# -- entry point ----------------------------------------------------------

def sweedler_oracle_check(S: Union[StructurePackage, ComodulePackage], axiom_id: str,
                          epsilon: EpsilonReading = EpsilonReading.XI) -> OracleResult:
    """
    Evaluate one axiom componentwise.

    Args:
        S: Structure or comodule package
        axiom_id: Axiom id as used by the checkers
        epsilon: Reading of ε, ε² for the post-Hom-Poisson identities

    Returns:
        OracleResult: Verdict and residual (left side minus right side)

    Raises:
        UnknownAxiom: If the id is not defined for the package's kind
    """
    if isinstance(S, ComodulePackage):
        table = comodule_table(S.kind)
        maps = {**S.base.comaps, "alpha": S.base.alpha, "alpha_m": S.alpha_m, **S.structure_maps}
        dom: SpaceId = S.mspace
        legs = lambda arity: (S.base.space,) * (arity - 1) + (S.mspace,)  # noqa: E731
        field, weight = S.field, S.field.zero
    else:
        table = structure_table(S.kind, epsilon)
        maps = dict(S.maps())
        dom = S.space
        legs = lambda arity: (S.space,) * arity  # noqa: E731
        field = S.field
        weight = S.rb.weight if S.rb is not None else field.zero

    if axiom_id not in table:
        raise UnknownAxiom(f"{S.kind.value} has no axiom {axiom_id!r}; known: {sorted(table)}")
    axiom = table[axiom_id]

    rows: Dict[int, List[Tuple[Scalar, Tuple[int, ...]]]] = {}
    evaluated = 0
    for i in range(1, dom.dim + 1):
        total: Terms = defaultdict(int)
        for summand in axiom.summands:
            evaluated += 1
            for index, c in _evaluate(summand, i, maps, field, weight).items():
                total[index] = field.add(total[index], c)
        rows[i] = [(c, index) for index, c in total.items() if c != 0]

    residual = TensorMap.from_rows(dom, legs(axiom.arity), field, rows)
    result = OracleResult(axiom_id, residual.is_zero(), residual, evaluated)
    logger.debug(f"Oracle {S.kind.value}/{axiom_id}: {'pass' if result.passed else 'fail'}")
    return result


def oracle_axiom_ids(S: Union[StructurePackage, ComodulePackage]) -> List[str]:
    if isinstance(S, ComodulePackage):
        return list(comodule_table(S.kind))
    return list(structure_table(S.kind))
