"""
Axiom table: every defining identity as a residual builder.

Each builder returns ``left side - right side`` of one identity composed
exactly in the order it is stated, so a vanishing residual means the axiom
holds. Builders only use the tensor calculus; the componentwise oracle in
``search.oracle`` re-derives the same identities independently.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from tensorcore import (
    I_TAU,
    TAU,
    TAU_I,
    XI,
    XI2,
    TensorMap,
    add,
    compose_pair,
    identity,
    lincomb,
    permute,
    precompose,
    sub,
)

from .schemas import AxiomRole, EpsilonReading, StructureKind, StructurePackage


class Terms:
    """
    Composition shorthands bound to one package's α.

    With ``elide_alpha`` every α-composition is skipped (α acts as the
    identity without being composed), which gives the classical identity.
    """

    def __init__(self, alpha: TensorMap, epsilon: EpsilonReading = EpsilonReading.XI,
                 elide_alpha: bool = False):
        self.ident = identity(alpha.dom, alpha.field)
        self.alpha = self.ident if elide_alpha else alpha
        self.elide_alpha = elide_alpha
        if EpsilonReading(epsilon) is EpsilonReading.XI:
            self.eps, self.eps2 = XI, XI2
        else:
            self.eps, self.eps2 = XI2, XI

    def alpha_left(self, f: TensorMap, delta: TensorMap) -> TensorMap:
        """(α⊗f)∘delta"""
        return compose_pair(self.alpha, f, delta)

    def alpha_right(self, f: TensorMap, delta: TensorMap) -> TensorMap:
        """(f⊗α)∘delta"""
        return compose_pair(f, self.alpha, delta)

    def alpha_both(self, delta: TensorMap) -> TensorMap:
        if self.elide_alpha:
            return delta
        return compose_pair(self.alpha, self.alpha, delta)

    def after_alpha(self, delta: TensorMap) -> TensorMap:
        """delta∘α"""
        if self.elide_alpha:
            return delta
        return precompose(delta, self.alpha)

    def cyclic(self, tensor: TensorMap) -> TensorMap:
        """(1+ξ+ξ²)∘tensor"""
        return add(tensor, permute(XI, tensor), permute(XI2, tensor))


Builder = Callable[[StructurePackage, Terms], TensorMap]


@dataclass(frozen=True)
class AxiomSpec:
    axiom_id: str
    build: Builder
    role: AxiomRole = AxiomRole.REQUIRED
    multiplicativity: bool = False


# -- generic identities ---------------------------------------------------

def coassociativity(name: str) -> Builder:
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        d = S.comap(name)
        return sub(t.alpha_left(d, d), t.alpha_right(d, d))
    return build


def comultiplicativity(name: str) -> Builder:
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        d = S.comap(name)
        return sub(t.after_alpha(d), t.alpha_both(d))
    return build


def cocommutativity(name: str) -> Builder:
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        d = S.comap(name)
        return sub(d, permute(TAU, d))
    return build


def skew_cocommutativity(name: str) -> Builder:
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        g = S.comap(name)
        return add(g, permute(TAU, g))
    return build


def co_jacobi(name: str) -> Builder:
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        g = S.comap(name)
        return t.cyclic(t.alpha_left(g, g))
    return build


def prelie_symmetry(name: str) -> Builder:
    """c(Δ) - (τ⊗I)∘c(Δ) with c(Δ) = (Δ⊗α)∘Δ - (α⊗Δ)∘Δ."""
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        d = S.comap(name)
        c = sub(t.alpha_right(d, d), t.alpha_left(d, d))
        return sub(c, permute(TAU_I, c))
    return build


def rb_commute(S: StructurePackage, t: Terms) -> TensorMap:
    r = S.rb.operator
    return sub(precompose(r, t.alpha), precompose(t.alpha, r))


def rb_weight(name: str) -> Builder:
    """(R⊗R)∘Δ - ((R⊗I)∘Δ + (I⊗R)∘Δ + λΔ)∘R"""
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        d, r, weight = S.comap(name), S.rb.operator, S.rb.weight
        inner = lincomb([(1, compose_pair(r, t.ident, d)),
                         (1, compose_pair(t.ident, r, d)),
                         (weight, d)])
        return sub(compose_pair(r, r, d), precompose(inner, r))
    return build


# -- tridendriform --------------------------------------------------------

def _split(S: StructurePackage) -> tuple[TensorMap, TensorMap, TensorMap]:
    dm1, d1 = S.comap("delta_m1"), S.comap("delta_1")
    d0 = S.comaps.get("delta_0")
    if d0 is None:
        d0 = TensorMap.zeros(S.space, (S.space, S.space), S.field)
    return dm1, d0, d1


def _c1(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_right(dm1, dm1), t.alpha_left(add(dm1, d1, d0), dm1))


def _c2(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_right(d1, dm1), t.alpha_left(dm1, d1))


def _c3(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_left(d1, d1), t.alpha_right(add(dm1, d1, d0), d1))


def _c4(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_right(dm1, d0), t.alpha_left(d1, d0))


def _c5(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_right(d1, d0), t.alpha_left(d0, d1))


def _c6(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_right(d0, dm1), t.alpha_left(dm1, d0))


def _c7(S, t):
    dm1, d0, d1 = _split(S)
    return sub(t.alpha_right(d0, d0), t.alpha_left(d0, d0))


def cocomm_d3(star: str, dot: str) -> Builder:
    """((Δ⋆ + τ∘Δ⋆ + Δ·)⊗α)∘Δ⋆ - (α⊗Δ⋆)∘Δ⋆"""
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        ds, dd = S.comap(star), S.comap(dot)
        return sub(t.alpha_right(add(ds, permute(TAU, ds), dd), ds), t.alpha_left(ds, ds))
    return build


def cocomm_d4(star: str, dot: str) -> Builder:
    """(Δ⋆⊗α)∘Δ· - (α⊗Δ·)∘Δ⋆"""
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        ds, dd = S.comap(star), S.comap(dot)
        return sub(t.alpha_right(ds, dd), t.alpha_left(dd, ds))
    return build


# -- post-Hom-Lie ---------------------------------------------------------

def _dplc3(S, t):
    g, d = S.comap("gamma"), S.comap("delta")
    return lincomb([(1, t.alpha_left(g, d)),
                    (-1, t.alpha_right(d, g)),
                    (-1, permute(TAU_I, t.alpha_left(d, g)))])


def _dplc4(S, t):
    g, d = S.comap("gamma"), S.comap("delta")
    da, ad = t.alpha_right(d, d), t.alpha_left(d, d)
    return lincomb([(1, da), (-1, ad),
                    (-1, permute(TAU_I, da)),
                    (1, permute(TAU_I, ad)),
                    (1, t.alpha_right(g, d))])


# -- Poisson compatibilities ----------------------------------------------

def leibniz(bracket: str, product: str) -> Builder:
    """(α⊗Δ∗)∘γ - (γ⊗α)∘Δ∗ - (τ⊗I)∘(α⊗γ)∘Δ∗"""
    def build(S: StructurePackage, t: Terms) -> TensorMap:
        g, da = S.comap(bracket), S.comap(product)
        return lincomb([(1, t.alpha_left(da, g)),
                        (-1, t.alpha_right(g, da)),
                        (-1, permute(TAU_I, t.alpha_left(g, da)))])
    return build


def _p2(S, t):
    g, d, ds, da = (S.comap(n) for n in ("gamma", "delta", "delta_star", "delta_ast"))
    return lincomb([(1, permute(I_TAU, t.alpha_left(ds, g))),
                    (-1, permute(t.eps2, t.alpha_left(g, ds))),
                    (1, permute(t.eps, t.alpha_left(d, da)))])


def _p3(S, t):
    d, da = S.comap("delta"), S.comap("delta_ast")
    return lincomb([(1, t.alpha_left(da, d)),
                    (-1, t.alpha_right(d, da)),
                    (-1, permute(TAU_I, t.alpha_left(d, da)))])


def _p4(S, t):
    d, ds, da = S.comap("delta"), S.comap("delta_star"), S.comap("delta_ast")
    star_dot = t.alpha_right(ds, d)
    return lincomb([(1, permute(t.eps, star_dot)),
                    (1, permute(t.eps2.compose(I_TAU), star_dot)),
                    (1, permute(t.eps, t.alpha_right(da, d))),
                    (-1, t.alpha_right(d, da)),
                    (-1, permute(TAU_I, t.alpha_left(d, da)))])


def _p5(S, t):
    # the bare Δ of the printed identity is read as Δ∗
    g, d, ds, da = (S.comap(n) for n in ("gamma", "delta", "delta_star", "delta_ast"))
    return lincomb([(1, permute(I_TAU, t.alpha_left(ds, d))),
                    (-1, permute(t.eps2, t.alpha_left(d, ds))),
                    (-1, permute(I_TAU, t.alpha_right(da, ds))),
                    (1, permute(t.eps2, t.alpha_right(d, ds))),
                    (-1, permute(I_TAU, t.alpha_right(g, ds)))])


# -- table ----------------------------------------------------------------

def _optional_multip(axiom_id: str, name: str) -> AxiomSpec:
    return AxiomSpec(axiom_id, comultiplicativity(name), AxiomRole.OPTIONAL, True)


_RB_AXIOMS = (AxiomSpec("rb-commute", rb_commute),)

_POST_HOM_LIE = (
    AxiomSpec("dplc1", skew_cocommutativity("gamma")),
    AxiomSpec("dplc1-multip", comultiplicativity("gamma"), AxiomRole.REQUIRED, True),
    AxiomSpec("dplc2", co_jacobi("gamma")),
    AxiomSpec("dplc3", _dplc3),
    AxiomSpec("dplc4", _dplc4),
    _optional_multip("multip-delta", "delta"),
)

AXIOM_TABLE: Dict[StructureKind, tuple[AxiomSpec, ...]] = {
    StructureKind.HOM_COASSOC: (
        AxiomSpec("coasso", coassociativity("delta")),
        _optional_multip("multip", "delta"),
    ),
    StructureKind.HOM_COASSOC_RB: (
        AxiomSpec("coasso", coassociativity("delta")),
        _optional_multip("multip", "delta"),
        *_RB_AXIOMS,
        AxiomSpec("rb-weight", rb_weight("delta")),
    ),
    StructureKind.HOM_LIE: (
        AxiomSpec("skew", skew_cocommutativity("gamma")),
        AxiomSpec("cojacobi", co_jacobi("gamma")),
        _optional_multip("multip", "gamma"),
    ),
    StructureKind.HOM_LIE_RB: (
        AxiomSpec("skew", skew_cocommutativity("gamma")),
        AxiomSpec("cojacobi", co_jacobi("gamma")),
        _optional_multip("multip", "gamma"),
        *_RB_AXIOMS,
        AxiomSpec("rb-weight", rb_weight("gamma")),
    ),
    StructureKind.HOM_PRELIE: (
        AxiomSpec("prelie", prelie_symmetry("delta")),
        _optional_multip("multip", "delta"),
    ),
    StructureKind.HOM_DENDRIFORM: (
        AxiomSpec("c1", _c1),
        AxiomSpec("c2", _c2),
        AxiomSpec("c3", _c3),
        _optional_multip("multip-m1", "delta_m1"),
        _optional_multip("multip-1", "delta_1"),
    ),
    StructureKind.HOM_TRIDENDRIFORM: (
        AxiomSpec("c1", _c1),
        AxiomSpec("c2", _c2),
        AxiomSpec("c3", _c3),
        AxiomSpec("c4", _c4),
        AxiomSpec("c5", _c5),
        AxiomSpec("c6", _c6),
        AxiomSpec("c7", _c7),
        _optional_multip("multip-m1", "delta_m1"),
        _optional_multip("multip-0", "delta_0"),
        _optional_multip("multip-1", "delta_1"),
    ),
    StructureKind.COCOMM_HOM_TRIDENDRIFORM: (
        AxiomSpec("coasso", coassociativity("delta")),
        AxiomSpec("cocomm", cocommutativity("delta")),
        AxiomSpec("d3", cocomm_d3("delta_star", "delta")),
        AxiomSpec("d4", cocomm_d4("delta_star", "delta")),
        _optional_multip("multip-star", "delta_star"),
        _optional_multip("multip-dot", "delta"),
    ),
    StructureKind.POST_HOM_LIE: _POST_HOM_LIE,
    StructureKind.HOM_POISSON: (
        AxiomSpec("skew", skew_cocommutativity("gamma")),
        AxiomSpec("cojacobi", co_jacobi("gamma")),
        AxiomSpec("coasso", coassociativity("delta")),
        AxiomSpec("cocomm", cocommutativity("delta")),
        AxiomSpec("p1", leibniz("gamma", "delta")),
        _optional_multip("multip-gamma", "gamma"),
        _optional_multip("multip-delta", "delta"),
    ),
    StructureKind.POST_HOM_POISSON: (
        *_POST_HOM_LIE,
        AxiomSpec("chd-coasso", coassociativity("delta_ast")),
        AxiomSpec("chd-cocomm", cocommutativity("delta_ast")),
        AxiomSpec("chd-d3", cocomm_d3("delta_star", "delta_ast")),
        AxiomSpec("chd-d4", cocomm_d4("delta_star", "delta_ast")),
        _optional_multip("chd-multip-star", "delta_star"),
        _optional_multip("chd-multip-ast", "delta_ast"),
        AxiomSpec("p1", leibniz("gamma", "delta_ast")),
        AxiomSpec("p2", _p2),
        AxiomSpec("p3", _p3),
        AxiomSpec("p4", _p4),
        AxiomSpec("p5", _p5),
    ),
}


def axiom_specs(kind: StructureKind, axiom_ids: Optional[list[str]] = None) -> tuple[AxiomSpec, ...]:
    specs = AXIOM_TABLE[StructureKind(kind)]
    if axiom_ids is None:
        return specs
    return tuple(spec for spec in specs if spec.axiom_id in set(axiom_ids))
