"""
Tests for witness search, minimization and the componentwise oracle.
"""

from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from comodules import ComodulePackage, comodule_axiom_residual, regular_comodule
from search import (
    AlphaConstraint,
    BudgetExceeded,
    GuardViolation,
    SearchConfig,
    SearchMode,
    WitnessRecord,
    enumerate_instances,
    exhaustive_size,
    full_report,
    minimize_witness,
    oracle_axiom_ids,
    quick_passes,
    random_raw_comodule,
    random_raw_package,
    sweedler_oracle_check,
)
from structures import RotaBaxter, StructureKind, UnknownAxiom, axiom_residual, check_structure
from tensorcore import FieldSpec, lincomb


def exhaustive(kind, dim, field="F3", **kwargs) -> SearchConfig:
    return SearchConfig(kind=kind, dim=dim, field=field, mode=SearchMode.EXHAUSTIVE, **kwargs)


@pytest.mark.unit
class TestSearchConfig:
    """Test search parameter validation."""

    def test_kind_from_string(self):
        """Test that structure and comodule kinds parse from their ids."""
        assert SearchConfig(kind="HomLie").kind is StructureKind.HOM_LIE
        cfg = SearchConfig(kind="PostHomLieComodule")
        assert cfg.is_comodule
        assert cfg.structure_kind is StructureKind.POST_HOM_LIE

    def test_invalid_field(self):
        """Test that composite moduli fail validation."""
        with pytest.raises(ValidationError):
            SearchConfig(kind="HomLie", field="Fp 4")

    def test_dimension_bounds(self):
        """Test that dimensions above four are refused."""
        with pytest.raises(ValidationError):
            SearchConfig(kind="HomLie", dim=5)


@pytest.mark.integration
class TestEnumeration:
    """Test exhaustive and random enumeration."""

    def test_grouplike_scalars(self):
        """Test that Δe1 = c e1⊗e1 is coassociative for every c in F3."""
        result = enumerate_instances(exhaustive("HomCoassoc", 1))
        assert result.total == 3
        assert result.visited == 3
        assert len(result) == 2
        assert not result.budget_exceeded
        assert [r.index for r in result] == [1, 2]

    def test_include_trivial(self):
        """Test that the zero candidate is kept on request."""
        result = enumerate_instances(exhaustive("HomCoassoc", 1, include_trivial=True))
        assert len(result) == 3
        assert result[0].package.is_zero()

    def test_two_dimensional_cobrackets(self):
        """Test that every skew cobracket on a plane satisfies co-Jacobi."""
        result = enumerate_instances(exhaustive("HomLie", 2))
        assert result.total == 9
        assert len(result) == 8
        assert all(r.verdicts.passed for r in result)

    def test_max_witnesses(self):
        """Test that the search stops after the requested number of witnesses."""
        result = enumerate_instances(exhaustive("HomCoassoc", 1, max_witnesses=1))
        assert len(result) == 1

    def test_budget_flag(self):
        """Test that a small budget is flagged and, when strict, raised."""
        result = enumerate_instances(exhaustive("HomCoassoc", 2, budget=10))
        assert result.budget_exceeded
        assert result.visited == 10
        with pytest.raises(BudgetExceeded) as exc:
            enumerate_instances(exhaustive("HomCoassoc", 2, budget=10, strict_budget=True))
        assert exc.value.partial.visited == 10

    def test_exhaustive_needs_finite_field(self):
        """Test that the rationals cannot be enumerated."""
        with pytest.raises(GuardViolation):
            enumerate_instances(exhaustive("HomCoassoc", 1, field="Q"))

    def test_search_space_guard(self):
        """Test that 5^81 tridendriform candidates are refused."""
        with pytest.raises(GuardViolation):
            enumerate_instances(exhaustive("HomTridendriform", 3, field="F5"))

    def test_exhaustive_size(self):
        """Test the candidate count of a space and its refusal over Q or past the guards."""
        assert exhaustive_size(SearchConfig(kind="HomLie", dim=2, field="F5")) == 25
        assert exhaustive_size(SearchConfig(kind="HomLie", dim=2, field="Q")) is None
        assert exhaustive_size(SearchConfig(kind="HomTridendriform", dim=3, field="F5")) is None

    def test_random_search_is_deterministic(self):
        """Test that the same seed gives the same witnesses over Q."""
        cfg = SearchConfig(kind="HomCoassoc", dim=2, field="Q", budget=200, seed=7,
                           alpha=AlphaConstraint.DIAGONAL)
        first, second = enumerate_instances(cfg), enumerate_instances(cfg)
        assert first.visited == 200
        assert [r.index for r in first] == [r.index for r in second]
        assert [r.package for r in first] == [r.package for r in second]

    def test_witness_names(self):
        """Test the record naming scheme."""
        record = enumerate_instances(exhaustive("HomCoassoc", 1))[0]
        assert record.name == "HomCoassoc-d1-F3-0-1"

    def test_comodule_search(self):
        """Test that comodule witnesses pass their own axioms."""
        cfg = SearchConfig(kind="PostHomLieComodule", dim=1, field="F3", mode=SearchMode.EXHAUSTIVE,
                           module_dim=1, include_trivial=True, budget=500)
        result = enumerate_instances(cfg)
        assert all(isinstance(r.package, ComodulePackage) for r in result)
        assert all(r.verdicts.passed for r in result)


@pytest.mark.unit
class TestMinimize:
    """Test greedy witness minimization."""

    def test_minimal_counterexample_is_fixpoint(self, factory, q):
        """Test that Δe1 = e1⊗e1 + e2⊗e2 cannot be shrunk and still fail."""
        S = factory.coassoc(q, 2, {1: [(1, (1, 1)), (1, (2, 2))]})
        record = WitnessRecord(S, 0, 0, full_report(S))
        assert minimize_witness(record) is record

    def test_shrinks_to_grouplike(self, load_fixture):
        """Test that the upper coalgebra shrinks to one group-like element."""
        S = load_fixture("coassoc_upper_q")
        record = WitnessRecord(S, 0, 0, full_report(S))

        def nonzero_coalgebra(package):
            return quick_passes(package) and not package.is_zero()

        minimized = minimize_witness(record, nonzero_coalgebra)
        assert minimized.minimized
        assert minimized.package.dim == 1
        assert minimized.package.comap("delta").support() == [(1, 1, 1)]
        assert minimize_witness(minimized, nonzero_coalgebra) is minimized

    def test_predicate_must_hold(self, load_fixture):
        """Test that a witness violating the predicate is returned unchanged."""
        S = load_fixture("dual_numbers_q")
        record = WitnessRecord(S, 0, 0, full_report(S))
        assert minimize_witness(record, lambda package: False) is record


@pytest.mark.unit
class TestOracle:
    """Test the componentwise oracle against the tensor checker."""

    @pytest.mark.parametrize("stem", [
        "coassoc_upper_q",
        "dual_numbers_twisted_q",
        "homlie_q",
        "rb_coassoc_q",
        "tridend_rb_q",
        "posthomlie_prelie_q",
    ])
    def test_agrees_on_fixtures(self, load_fixture, stem):
        """Test that both evaluations pass on handcrafted structures."""
        S = load_fixture(stem)
        verdicts = check_structure(S).verdicts()
        for axiom_id in oracle_axiom_ids(S):
            if axiom_id in verdicts:
                assert sweedler_oracle_check(S, axiom_id).passed == verdicts[axiom_id], axiom_id

    def test_detects_non_coassociativity(self, factory, q):
        """Test that the oracle fails where the checker fails."""
        S = factory.coassoc(q, 2, {1: [(1, (1, 1)), (1, (2, 2))]})
        result = sweedler_oracle_check(S, "coasso")
        assert not result.passed
        assert result.residual.first_failing_basis_index() == 1
        assert result.summands_evaluated > 0

    def test_rota_baxter_weight(self, load_fixture):
        """Test the λ term: R = -id has weight 1 and the residual at weight -1 is -2Δ."""
        S = load_fixture("rb_coassoc_q")
        assert sweedler_oracle_check(S, "rb-weight").passed
        wrong = replace(S, rb=RotaBaxter(S.rb.operator, -1))
        result = sweedler_oracle_check(wrong, "rb-weight")
        assert not result.passed
        assert result.residual == lincomb([(-2, S.comap("delta"))])
        assert result.residual == axiom_residual(wrong, "rb-weight")

    def test_comodule_axioms(self, load_fixture):
        """Test the oracle on the regular comodule."""
        Cm = regular_comodule(load_fixture("posthomlie_bracket_q"))
        assert all(sweedler_oracle_check(Cm, axiom_id).passed
                   for axiom_id in oracle_axiom_ids(Cm) if axiom_id != "ma3-printed")

    def test_unknown_axiom(self, load_fixture):
        """Test that unknown ids raise."""
        with pytest.raises(UnknownAxiom):
            sweedler_oracle_check(load_fixture("homlie_q"), "coasso")


RAW_FIELD = FieldSpec.prime(7)
RAW_PER_KIND = 200


def assert_structure_residuals_agree(S):
    for axiom_id in oracle_axiom_ids(S):
        assert sweedler_oracle_check(S, axiom_id).residual == axiom_residual(S, axiom_id), (S.kind, axiom_id)


def assert_comodule_residuals_agree(Cm):
    for axiom_id in oracle_axiom_ids(Cm):
        assert sweedler_oracle_check(Cm, axiom_id).residual == comodule_axiom_residual(Cm, axiom_id), axiom_id


@pytest.mark.property
class TestOracleProperties:
    """Random raw packages give the same residuals both ways."""

    @given(st.sampled_from(list(StructureKind)), st.integers(0, 1000))
    @settings(max_examples=60, deadline=None)
    def test_residuals_agree(self, kind, index):
        """Test agreement of every axiom on packages with free α and R over F3."""
        assert_structure_residuals_agree(random_raw_package(kind, 2, FieldSpec.prime(3), seed=11, index=index))

    @given(st.sampled_from([StructureKind.HOM_TRIDENDRIFORM, StructureKind.POST_HOM_LIE]), st.integers(0, 1000))
    @settings(max_examples=20, deadline=None)
    def test_comodule_residuals_agree(self, kind, index):
        """Test agreement on raw comodules over raw bases."""
        base = random_raw_package(kind, 2, FieldSpec.prime(3), seed=5, index=index)
        assert_comodule_residuals_agree(random_raw_comodule(base, 2, seed=5, index=index))

    @given(st.integers(0, 1000))
    @settings(max_examples=10, deadline=None)
    def test_raw_packages_are_reproducible(self, index):
        """Test that seed and index fix the package."""
        field = FieldSpec.prime(5)
        first = random_raw_package(StructureKind.HOM_LIE_RB, 2, field, seed=3, index=index)
        assert first == random_raw_package(StructureKind.HOM_LIE_RB, 2, field, seed=3, index=index)
        assert first.rb is not None


@pytest.mark.slow
@pytest.mark.integration
class TestOracleSweep:
    """Seeded sweep of raw dimension-3 packages over F7."""

    @pytest.mark.parametrize("kind", list(StructureKind), ids=lambda kind: kind.value)
    def test_structure_kind(self, kind):
        """Test that no axiom of the kind disagrees on any of the packages."""
        for index in range(RAW_PER_KIND):
            assert_structure_residuals_agree(random_raw_package(kind, 3, RAW_FIELD, seed=1, index=index))

    @pytest.mark.parametrize("kind", [StructureKind.HOM_TRIDENDRIFORM, StructureKind.POST_HOM_LIE],
                             ids=lambda kind: kind.value)
    def test_comodule_kind(self, kind):
        """Test the comodule axioms on raw comodules of dimension 2 over raw bases."""
        for index in range(RAW_PER_KIND):
            base = random_raw_package(kind, 3, RAW_FIELD, seed=1, index=index)
            assert_comodule_residuals_agree(random_raw_comodule(base, 2, seed=1, index=index))
