"""
Tests for the theorem registry and campaign runner.
"""

import pytest

from search import AlphaConstraint, SearchMode
from structures import EpsilonReading, StructureKind
from tensorcore import FieldSpec, TensorMap
from verifier import (
    THEOREMS,
    NoWitnessesFound,
    UnknownTheorem,
    WitnessPools,
    get_theorem,
    parse_structure_file,
    theorem_ids,
    verify_all,
    verify_theorem,
)
from verifier.campaign import TrialContext, Witness, conclusion_failures, run_trial
from verifier.theorems import report_only_ids


@pytest.fixture(scope="module")
def pools(engine) -> WitnessPools:
    """Witness pools over Q in dimension 1, shared by the campaigns of this module."""
    return WitnessPools(FieldSpec.rationals(), 1, 0, engine, EpsilonReading.XI, limit=3)


@pytest.mark.unit
class TestRegistry:
    """Test theorem lookup."""

    def test_ids_are_unique(self):
        """Test that no id is registered twice."""
        ids = theorem_ids()
        assert len(ids) == len(set(ids)) == len(THEOREMS)

    def test_report_only_entries(self):
        """Test that report-only entries carry a reason and can be filtered out."""
        for theorem_id in report_only_ids():
            assert get_theorem(theorem_id).reason
            assert theorem_id not in theorem_ids(include_report_only=False)
        assert "L-le1" in report_only_ids()

    def test_unknown_theorem(self):
        """Test that unknown ids raise."""
        with pytest.raises(UnknownTheorem):
            get_theorem("T-404")


@pytest.mark.integration
class TestCampaign:
    """Test campaigns over small witness pools."""

    def test_pool_members_pass_their_axioms(self, pools):
        """Test that pooled witnesses satisfy the hypotheses and are distinct."""
        pool = pools.get(StructureKind.HOM_COASSOC)
        assert pool
        assert all(pools.holds(w.package) for w in pool)
        assert "coassoc_grouplike_q" in [w.name for w in pool]
        assert pools.get(StructureKind.HOM_COASSOC) is pool

    def test_commutator_campaign(self, pools, engine):
        """Test that (1 - τ)Δ is confirmed on three witnesses."""
        report = verify_theorem("T-am1", trials=3, field="Q", dim=1, seed=0, engine=engine, pools=pools)
        assert report.witnesses == 3
        assert not report.refuted
        assert report.passed == 3
        assert report.counterexamples == []

    def test_refuted_theorem(self, pools, engine, fake_theorems):
        """Test that failures produce counterexamples and ledger lines."""
        report = verify_theorem("T-fake", trials=2, field="Q", dim=1, seed=0, engine=engine, pools=pools)
        assert report.refuted
        assert report.failed == 2
        outcome = report.outcomes[0]
        assert "skew" in outcome.failures["as_bracket"]
        assert len(report.counterexamples) == 2
        assert all(entry.values["refuted"] == "true" for entry in report.ledger)
        witness = parse_structure_file(report.counterexamples[0].text)
        assert witness.kind is StructureKind.HOM_COASSOC

    def test_no_witnesses(self, pools, engine, fake_theorems):
        """Test that an unsatisfiable hypothesis raises."""
        with pytest.raises(NoWitnessesFound) as exc:
            verify_theorem("T-none", trials=2, field="Q", dim=1, seed=0, engine=engine, pools=pools)
        assert exc.value.theorem == "T-none"

    def test_verify_all_skips_empty_campaigns(self, engine, fake_theorems):
        """Test that campaigns without witnesses are reported as skipped."""
        reports, skipped = verify_all(["T-am1", "T-none"], trials=2, field="Q", dim=1, seed=0, engine=engine)
        assert [r.theorem for r in reports] == ["T-am1"]
        assert "T-none" in skipped

    def test_report_only_campaign(self, pools, engine):
        """Test that the associator identity feeds the ledger without refuting."""
        report = verify_theorem("L-le1", trials=2, field="Q", dim=1, seed=0, engine=engine, pools=pools)
        assert report.report_only
        assert not report.refuted
        assert len(report.ledger) == report.witnesses
        line = report.ledger[0].line()
        assert line.startswith("L-le1 ")
        assert "admissible=true" in line

    def test_small_spaces_are_enumerated(self, engine):
        """Test that a plane over F5 contributes all 24 nonzero skew cobrackets."""
        pools = WitnessPools(FieldSpec.prime(5), 2, 0, engine, EpsilonReading.XI, limit=25)
        configs = pools.search_configs(StructureKind.HOM_LIE)
        plane = [c for c in configs if c.dim == 2 and c.alpha is AlphaConstraint.IDENTITY]
        assert [c.mode for c in plane] == [SearchMode.EXHAUSTIVE]
        plane_lie = [w.package for w in pools.get(StructureKind.HOM_LIE)
                     if w.package.dim == 2 and not w.package.is_zero()
                     and w.package.alpha == TensorMap.identity(w.package.space, w.package.field)]
        assert len(plane_lie) == 24


@pytest.mark.unit
class TestTrials:
    """Test single trials."""

    def test_run_trial_records_variants(self, pools, load_fixture):
        """Test one passing trial of the commutator theorem."""
        witness = Witness("dual_numbers_q", load_fixture("dual_numbers_q"), "fixture")
        outcome, outputs = run_trial(get_theorem("T-am1"), witness, TrialContext(pools), EpsilonReading.XI)
        assert outcome.passed
        assert outcome.variants == {"commutator": True}
        assert outputs["commutator"].is_zero()

    def test_conclusion_failures_name_axioms(self, load_fixture, fake_theorems):
        """Test that a failing conclusion lists its axiom and first basis index."""
        S = load_fixture("coassoc_grouplike_q")
        theorem = fake_theorems["T-fake"]
        (_, output), = theorem.apply(S, None)
        failures = conclusion_failures(theorem, output, EpsilonReading.XI)
        assert failures["skew"] == 1
        assert "multip" not in failures
