"""
Unit tests for twists, derived comultiplications, post-Hom-Lie
constructions and the rule registry.
"""

from fractions import Fraction

import pytest

from constructions import (
    ConstructionRule,
    EnumerationTooLarge,
    InvalidParameter,
    NotCocommutative,
    NotEndomorphism,
    NotMultiplicative,
    PostHomLieTarget,
    RbTarget,
    SingularTwist,
    UnknownRule,
    UnsupportedKind,
    WeightMismatch,
    admissible,
    commutator_cobracket,
    dendriform_to_prelie,
    find_endomorphisms,
    get_registry,
    is_endomorphism,
    le1_report,
    list_rule_ids,
    parse_endomorphism,
    permute_basis,
    posthomlie_derive,
    postpoisson_to_homopoisson,
    power_twist,
    rb_coassoc_derive,
    rb_homlie_to_posthomlie,
    sub_homlie,
    tensor_posthomlie,
    tilde,
    tridend_sum,
    tridend_to_dendriform,
    tridend_to_posthomlie,
    yau_twist,
)
from structures import (
    KindMismatch,
    RotaBaxter,
    StructureKind,
    StructurePackage,
    check_structure,
)
from tensorcore import CharacteristicConflict, FieldSpec, SpaceId, TensorMap, lincomb


@pytest.mark.unit
class TestYauTwist:
    """Test twisting along endomorphisms."""

    def test_twist_dual_numbers(self, load_fixture):
        """Test that twisting by diag(1, 2) gives the twisted fixture."""
        S = load_fixture("dual_numbers_q")
        beta = TensorMap.diagonal(S.space, S.field, [1, 2])
        twisted = yau_twist(S, beta)
        assert twisted == load_fixture("dual_numbers_twisted_q")
        report = check_structure(twisted)
        assert report.passed and report.multiplicative

    def test_not_an_endomorphism(self, load_fixture):
        """Test that swapping e1 and e2 is refused on the dual numbers."""
        S = load_fixture("dual_numbers_q")
        swap = TensorMap.from_matrix(S.space, S.field, [[0, 1], [1, 0]])
        assert not is_endomorphism(S, swap)
        with pytest.raises(NotEndomorphism) as exc:
            yau_twist(S, swap)
        assert "delta" in str(exc.value)

    def test_unsupported_kind(self, q):
        """Test that pre-Lie packages have no twist rule."""
        S = StructurePackage.zero(StructureKind.HOM_PRELIE, SpaceId("C", 1), q)
        with pytest.raises(UnsupportedKind):
            yau_twist(S, TensorMap.identity(S.space, q))

    def test_untwist_by_inverse_power(self, load_fixture):
        """Test that α⁻¹ undoes the twist and leaves the identity twist map."""
        twisted = load_fixture("dual_numbers_twisted_q")
        assert power_twist(twisted, 1, inverse=True) == load_fixture("dual_numbers_q")

    def test_power_zero_is_identity(self, load_fixture):
        """Test that n = 0 returns the package unchanged."""
        S = load_fixture("dual_numbers_twisted_q")
        assert power_twist(S, 0) is S

    def test_power_twist_needs_multiplicative(self, factory, q):
        """Test that α = 2 on a group-like element is refused."""
        S = factory.coassoc(q, 1, {1: [(1, (1, 1))]}, alpha=[2])
        with pytest.raises(NotMultiplicative):
            power_twist(S, 1)

    def test_singular_inverse_twist(self, factory, q):
        """Test that α⁻¹ of a singular multiplicative α is refused."""
        S = factory.coassoc(q, 2, {1: [(1, (1, 1))], 2: [(1, (1, 2)), (1, (2, 1))]}, alpha=[1, 0])
        with pytest.raises(SingularTwist):
            power_twist(S, 1, inverse=True)

    def test_find_endomorphisms(self, load_fixture):
        """Test that the enumeration over F5 finds the identity and only endomorphisms."""
        S = load_fixture("dual_numbers_f5")
        found = find_endomorphisms(S)
        assert TensorMap.identity(S.space, S.field) in found
        assert all(is_endomorphism(S, beta) for beta in found)
        assert not any(beta.is_zero() for beta in found)
        assert find_endomorphisms(S, limit=1) == found[:1]

    def test_find_endomorphisms_over_q(self, load_fixture):
        """Test that the rationals cannot be enumerated."""
        with pytest.raises(EnumerationTooLarge):
            find_endomorphisms(load_fixture("dual_numbers_q"))


@pytest.mark.unit
class TestDerived:
    """Test comultiplications derived from other structures."""

    def test_commutator_of_cocommutative_is_zero(self, load_fixture):
        """Test that the dual numbers give the zero cobracket."""
        assert commutator_cobracket(load_fixture("dual_numbers_q")).is_zero()

    def test_commutator_is_hom_lie(self, load_fixture):
        """Test that the commutator of a non-cocommutative coalgebra is Hom-Lie."""
        gamma = commutator_cobracket(load_fixture("coassoc_upper_q"))
        assert gamma.kind is StructureKind.HOM_LIE
        assert not gamma.is_zero()
        assert check_structure(gamma).passed

    def test_rb_split_matches_fixture(self, load_fixture):
        """Test that R = -id of weight 1 gives the tridendriform fixture."""
        S = load_fixture("rb_coassoc_q")
        assert rb_coassoc_derive(S, RbTarget.TRIDEND) == load_fixture("tridend_rb_q")

    def test_rb_dendriform(self, load_fixture):
        """Test that (Δ₋₁ + λΔ, Δ₁) cancels the left comap for R = -id."""
        S = load_fixture("rb_coassoc_q")
        dend = rb_coassoc_derive(S, "dendriform")
        assert dend.comap("delta_m1").is_zero()
        assert dend.comap("delta_1") == lincomb([(-1, S.comap("delta"))])

    def test_weight_zero_prelie(self, load_fixture):
        """Test that the weight-0 operator on the dual numbers gives a Hom-pre-Lie coalgebra."""
        prelie = rb_coassoc_derive(load_fixture("rb_weight0_dual_q"), RbTarget.PRELIE0)
        assert prelie.kind is StructureKind.HOM_PRELIE
        assert check_structure(prelie).passed

    def test_weight_mismatch(self, load_fixture):
        """Test that the weight-0 target refuses a weight-1 operator."""
        with pytest.raises(WeightMismatch):
            rb_coassoc_derive(load_fixture("rb_coassoc_q"), RbTarget.PRELIE0)
        with pytest.raises(WeightMismatch):
            rb_coassoc_derive(load_fixture("rb_coassoc_q"), RbTarget.DENDRIFORM_B, weight=0)

    def test_rb_derive_needs_rb_kind(self, load_fixture):
        """Test that a plain coalgebra is refused."""
        with pytest.raises(KindMismatch):
            rb_coassoc_derive(load_fixture("dual_numbers_q"), RbTarget.TRIDEND)

    def test_tridend_sum(self, load_fixture):
        """Test that the three comaps of the fixture add up to -Δ."""
        total = tridend_sum(load_fixture("tridend_rb_q"))
        upper = load_fixture("coassoc_upper_q")
        assert total.comap("delta") == lincomb([(-1, upper.comap("delta"))])
        assert check_structure(total).passed

    def test_tridend_to_prelie(self, load_fixture):
        """Test the chain tridendriform -> dendriform -> pre-Lie on the split fixture."""
        dendriform = tridend_to_dendriform(load_fixture("tridend_rb_q"))
        assert dendriform.comap("delta_m1").is_zero()
        prelie = dendriform_to_prelie(dendriform)
        upper = load_fixture("coassoc_upper_q")
        assert prelie.kind is StructureKind.HOM_PRELIE
        assert prelie.comap("delta") == lincomb([(-1, upper.comap("delta"))])
        assert check_structure(prelie).passed

    def test_tridend_to_posthomlie(self, load_fixture):
        """Test that the split fixture gives Δ = -γ with γ(e2) = e1⊗e2 - e2⊗e1."""
        P = tridend_to_posthomlie(load_fixture("tridend_rb_q"))
        gamma = P.comap("gamma")
        assert P.kind is StructureKind.POST_HOM_LIE
        assert gamma.entry(1, 0, 1) == 1
        assert gamma.entry(1, 1, 0) == -1
        assert P.comap("delta") == lincomb([(-1, gamma)])

    def test_postpoisson_to_homopoisson(self, load_fixture):
        """Test the symmetrized comultiplication (1 + τ)∘Δ⋆ + Δ∗."""
        D = load_fixture("coassoc_upper_q").comap("delta")
        S = StructurePackage.zero(StructureKind.POST_HOM_POISSON, D.dom, D.field).with_maps(delta_star=D)
        H = postpoisson_to_homopoisson(S)
        assert H.kind is StructureKind.HOM_POISSON
        assert H.comap("gamma").is_zero()
        assert H.comap("delta").entry(0, 0, 0) == 2
        assert H.comap("delta").entry(1, 1, 0) == 1

    def test_zero_postpoisson(self, q):
        """Test that the zero post-Hom-Poisson coalgebra gives a passing Hom-Poisson one."""
        S = StructurePackage.zero(StructureKind.POST_HOM_POISSON, SpaceId("C", 1), q)
        assert check_structure(postpoisson_to_homopoisson(S)).passed

    def test_derivations_check_kind(self, load_fixture):
        """Test that each derivation refuses the wrong kind."""
        with pytest.raises(KindMismatch):
            dendriform_to_prelie(load_fixture("tridend_rb_q"))
        with pytest.raises(KindMismatch):
            postpoisson_to_homopoisson(load_fixture("posthomlie_prelie_q"))


@pytest.mark.unit
class TestPostHomLie:
    """Test post-Hom-Lie constructions."""

    def test_tilde_is_involution(self, load_fixture):
        """Test that (Δ + γ, -γ) applied twice gives the original."""
        P = load_fixture("posthomlie_prelie_q")
        assert tilde(tilde(P)) == P

    def test_admissible_of_bracket(self, load_fixture):
        """Test that (1 - τ)(Δ + γ/2) recovers a skew γ when Δ = 0."""
        P = load_fixture("posthomlie_bracket_q")
        assert admissible(P).comap("gamma") == P.comap("gamma")
        assert sub_homlie(P).comap("gamma") == P.comap("gamma")

    def test_admissible_needs_odd_characteristic(self):
        """Test that 1/2 is refused over F2."""
        P = StructurePackage.zero(StructureKind.POST_HOM_LIE, SpaceId("C", 1), FieldSpec.prime(2))
        with pytest.raises(CharacteristicConflict):
            admissible(P)

    def test_le1_report_fields(self, load_fixture):
        """Test the ledger fields of the associator report."""
        report = le1_report(load_fixture("posthomlie_bracket_q"))
        data = report.to_dict()
        assert set(data) == {"L=R1", "L=R2", "cyclic", "admissible", "verdict"}
        assert data["admissible"] is True
        assert data["verdict"] in ("both", "R1", "R2", "neither")

    def test_tensor_with_grouplike(self, load_fixture):
        """Test that a group-like factor leaves an isomorphic post-Hom-Lie coalgebra."""
        product = tensor_posthomlie(load_fixture("posthomlie_bracket_q"), load_fixture("coassoc_grouplike_q"))
        assert product.dim == 2
        assert check_structure(product).passed

    def test_tensor_needs_cocommutative(self, load_fixture):
        """Test that a non-cocommutative factor is refused."""
        with pytest.raises(NotCocommutative):
            tensor_posthomlie(load_fixture("posthomlie_bracket_q"), load_fixture("coassoc_upper_q"))

    def test_basis_relabelling(self, load_fixture):
        """Test that a relabelled copy still passes and reversing twice is the identity."""
        P = load_fixture("posthomlie_prelie_q")
        swapped = permute_basis(P, [2, 1])
        assert check_structure(swapped).passed
        assert permute_basis(swapped, [2, 1]) == P

    def test_derive_dispatch(self, load_fixture):
        """Test that the dispatcher reaches each post-Hom-Lie derivation."""
        P = load_fixture("posthomlie_prelie_q")
        assert posthomlie_derive(P, PostHomLieTarget.TILDE) == tilde(P)
        assert posthomlie_derive(P, "sub_homlie").kind is StructureKind.HOM_LIE
        with pytest.raises(KindMismatch):
            posthomlie_derive(load_fixture("homlie_q"), PostHomLieTarget.TILDE)

    def test_rb_homlie(self, load_fixture):
        """Test the maps (λγ, (R⊗I)γ) for R = -id of weight 1."""
        L = load_fixture("homlie_q")
        operator = TensorMap.scalar_multiple(L.space, L.field, -1)
        S = StructurePackage(StructureKind.HOM_LIE_RB, L.space, L.field, L.alpha, L.comaps, RotaBaxter(operator, 1))
        P = rb_homlie_to_posthomlie(S)
        assert P.comap("gamma") == L.comap("gamma")
        assert P.comap("delta") == lincomb([(-1, L.comap("gamma"))])


@pytest.mark.unit
class TestRegistry:
    """Test rule lookup and parameter handling."""

    def test_apply_yau_twist(self, load_fixture):
        """Test that string parameters are parsed before the rule runs."""
        S = load_fixture("dual_numbers_q")
        result = get_registry().apply(ConstructionRule("yau_twist", {"beta": "diag:1,2"}), S)
        assert result == load_fixture("dual_numbers_twisted_q")

    def test_apply_power_twist_flags(self, load_fixture):
        """Test boolean and integer parameters."""
        S = load_fixture("dual_numbers_twisted_q")
        rule = ConstructionRule("power_twist", {"n": "1", "inverse": "yes"})
        assert get_registry().apply(rule, S) == load_fixture("dual_numbers_q")

    def test_unknown_rule(self, load_fixture):
        """Test that unknown ids raise."""
        with pytest.raises(UnknownRule):
            get_registry().apply(ConstructionRule("no_such_rule"), load_fixture("dual_numbers_q"))

    def test_missing_and_unknown_parameters(self, load_fixture):
        """Test that required parameters and stray parameters are reported."""
        S = load_fixture("dual_numbers_q")
        with pytest.raises(InvalidParameter):
            get_registry().apply(ConstructionRule("yau_twist"), S)
        with pytest.raises(InvalidParameter):
            get_registry().apply(ConstructionRule("commutator_cobracket", {"n": "2"}), S)

    def test_bad_choice(self, load_fixture):
        """Test that choice parameters are validated."""
        with pytest.raises(InvalidParameter):
            get_registry().apply(ConstructionRule("rb_coassoc_derive", {"target": "bogus"}),
                                 load_fixture("rb_coassoc_q"))

    def test_aux_required(self, load_fixture):
        """Test that binary rules need a second package."""
        with pytest.raises(InvalidParameter):
            get_registry().apply(ConstructionRule("tensor_posthomlie"), load_fixture("posthomlie_bracket_q"))

    def test_parse_endomorphism(self, q):
        """Test matrix and diagonal spellings."""
        space = SpaceId("C", 2)
        assert parse_endomorphism("1,0;0,1/2", space, q) == TensorMap.diagonal(space, q, [1, Fraction(1, 2)])
        assert parse_endomorphism("diag:3,4", space, q) == TensorMap.diagonal(space, q, [3, 4])
        for bad in ("1,0;0", "diag:1", "diag:1/0,1", "a,b;c,d"):
            with pytest.raises(InvalidParameter):
                parse_endomorphism(bad, space, q)

    def test_rule_listing(self):
        """Test that the listing names every registered rule."""
        ids = list_rule_ids()
        assert "yau_twist" in ids
        assert ids == sorted(ids)
        assert get_registry().list_rules()["tensor_posthomlie"]["needs_aux"] is True
