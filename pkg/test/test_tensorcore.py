"""
Unit tests for the exact tensor calculus.

These tests pin down scalar canonical forms, the leg conventions of
``permute`` and ``compose_pair``, and exact matrix inversion over Q and F_p.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensorcore import (
    TAU,
    XI,
    XI2,
    ArityMismatch,
    ArityOverflow,
    CharacteristicConflict,
    EmptyInput,
    FieldSpec,
    InvalidPermutation,
    LegPermutation,
    NonPrimeModulus,
    ShapeError,
    SignatureMismatch,
    SingularMatrix,
    SpaceId,
    TensorCoreError,
    TensorMap,
    add,
    compose,
    compose_pair,
    identity,
    is_invertible,
    kron,
    lincomb,
    matrix_inverse,
    matrix_power,
    permute,
    precompose,
    sub,
)

C = SpaceId("C", 2)


@pytest.mark.unit
class TestFieldSpec:
    """Test field parsing and scalar canonical forms."""

    def test_parse_designations(self):
        """Test every accepted spelling of a field."""
        assert FieldSpec.parse("Q") == FieldSpec.rationals()
        assert FieldSpec.parse("Fp 5") == FieldSpec.prime(5)
        assert FieldSpec.parse("F7").p == 7
        assert FieldSpec.parse("Fp13").characteristic == 13

    def test_non_prime_modulus_rejected(self):
        """Test that composite moduli are refused."""
        with pytest.raises(NonPrimeModulus):
            FieldSpec.prime(4)
        with pytest.raises(NonPrimeModulus):
            FieldSpec.parse("Fp 9")

    def test_unknown_designation(self):
        """Test that unknown field names raise the base error."""
        with pytest.raises(TensorCoreError):
            FieldSpec.parse("R")

    def test_prime_field_scalars(self, f5):
        """Test residues and inverses of denominators mod p."""
        assert f5.scalar(-1) == 4
        assert f5.scalar(Fraction(1, 2)) == 3
        assert f5.scalar("3/2") == 4
        assert f5.format_scalar(-1) == "4"

    def test_denominator_vanishing_mod_p(self, f5):
        """Test that 1/5 does not exist in F5."""
        with pytest.raises(CharacteristicConflict):
            f5.scalar("1/5")

    def test_rational_scalars(self, q):
        """Test that rationals are kept in lowest terms."""
        assert q.scalar("-6/4") == Fraction(-3, 2)
        assert q.format_scalar(Fraction(4, 2)) == "2"
        assert q.format_scalar(Fraction(-1, 3)) == "-1/3"

    def test_half_in_characteristic_two(self):
        """Test that 1/2 is refused in characteristic 2."""
        with pytest.raises(CharacteristicConflict):
            FieldSpec.prime(2).half()

    def test_labels(self, q, f5):
        """Test labels used in file names and headers."""
        assert (q.label, q.header) == ("Q", "Q")
        assert (f5.label, f5.header) == ("F5", "Fp 5")


@pytest.mark.unit
class TestTensorMap:
    """Test construction and inspection of structure constants."""

    def test_invalid_spaces(self):
        """Test that empty names and zero dimensions are refused."""
        with pytest.raises(ShapeError):
            SpaceId("C", 0)
        with pytest.raises(ShapeError):
            SpaceId("", 2)

    def test_shape_must_match_signature(self, q):
        """Test that coefficient arrays are checked against the signature."""
        with pytest.raises(ShapeError):
            TensorMap(C, (C, C), np.zeros((2, 2)), q)

    def test_arity_limit(self, q):
        """Test that four output legs are refused."""
        with pytest.raises(ArityOverflow):
            TensorMap.zeros(C, (C, C, C, C), q)

    def test_from_rows_accumulates(self, q):
        """Test that repeated index tuples add up."""
        delta = TensorMap.from_rows(C, (C, C), q, {1: [(1, (1, 2)), (2, (1, 2))]})
        assert delta.entry(0, 0, 1) == 3
        assert delta.support() == [(1, 1, 2)]
        assert delta.first_failing_basis_index() == 1

    def test_from_rows_out_of_range(self, q):
        """Test that basis indices beyond the dimension are refused."""
        with pytest.raises(ShapeError):
            TensorMap.from_rows(C, (C, C), q, {1: [(1, (1, 3))]})

    def test_prime_field_reduction(self, f5):
        """Test that coefficients are reduced on construction."""
        tensor = TensorMap.from_matrix(C, f5, [[6, -1], [0, 10]])
        assert tensor.entry(0, 0) == 1
        assert tensor.entry(0, 1) == 4
        assert tensor.entry(1, 1) == 0

    def test_equality_and_hash(self, q):
        """Test componentwise equality and consistent hashing."""
        first = TensorMap.diagonal(C, q, [1, 2])
        second = TensorMap.from_matrix(C, q, [[1, 0], [0, 2]])
        assert first == second
        assert hash(first) == hash(second)
        assert first != TensorMap.identity(C, q)

    def test_rows_are_sorted(self, q):
        """Test that rows list terms by basis index."""
        delta = TensorMap.from_rows(C, (C, C), q, {2: [(1, (2, 1)), (1, (1, 2))]})
        assert delta.row(2) == [(Fraction(1), (1, 2)), (Fraction(1), (2, 1))]
        assert delta.row(1) == []


@pytest.mark.unit
class TestLegPermutation:
    """Test leg permutations."""

    def test_invalid_permutation(self):
        """Test that non-permutations are refused."""
        with pytest.raises(InvalidPermutation):
            LegPermutation((1, 1))
        with pytest.raises(InvalidPermutation):
            LegPermutation((1,))

    def test_cyclic_powers(self):
        """Test that ξ∘ξ = ξ² and ξ³ = id."""
        assert XI.compose(XI) == XI2
        assert XI.power(3) == LegPermutation.identity(3)
        assert XI.inverse() == XI2

    def test_from_sigma(self):
        """Test that Φσ stores σ⁻¹ as the source legs."""
        assert LegPermutation.from_sigma((3, 1, 2)) == XI


@pytest.mark.unit
class TestCalculus:
    """Test the four tensor operations."""

    def test_permute_swaps_legs(self, q):
        """Test that τ moves e1⊗e2 to e2⊗e1."""
        delta = TensorMap.from_rows(C, (C, C), q, {1: [(1, (1, 2))]})
        assert permute(TAU, delta).support() == [(1, 2, 1)]

    def test_permute_arity_mismatch(self, q):
        """Test that a 3-leg permutation is refused on a 2-leg map."""
        with pytest.raises(ArityMismatch):
            permute(XI, TensorMap.zeros(C, (C, C), q))

    def test_compose_pair_with_identities(self, q):
        """Test that (I⊗I)∘Δ = Δ."""
        delta = TensorMap.from_rows(C, (C, C), q, {1: [(1, (1, 1))], 2: [(1, (1, 2)), (1, (2, 1))]})
        ident = identity(C, q)
        assert compose_pair(ident, ident, delta) == delta

    def test_compose_pair_coassociativity_of_grouplike(self, q):
        """Test that (Δ⊗I)∘Δ and (I⊗Δ)∘Δ agree on a group-like element."""
        D = SpaceId("D", 1)
        delta = TensorMap.from_rows(D, (D, D), q, {1: [(1, (1, 1))]})
        ident = identity(D, q)
        assert compose_pair(delta, ident, delta) == compose_pair(ident, delta, delta)

    def test_compose_pair_arity_overflow(self, q):
        """Test that four output legs are refused."""
        delta = TensorMap.zeros(C, (C, C), q)
        with pytest.raises(ArityOverflow):
            compose_pair(delta, delta, delta)

    def test_compose_pair_needs_matching_legs(self, q):
        """Test that legs must line up with the inner codomain."""
        D = SpaceId("D", 2)
        delta = TensorMap.zeros(C, (C, C), q)
        with pytest.raises(SignatureMismatch):
            compose_pair(identity(D, q), identity(C, q), delta)

    def test_precompose_scales(self, q):
        """Test that Δ∘(2·id) doubles every coefficient."""
        delta = TensorMap.from_rows(C, (C, C), q, {2: [(3, (1, 2))]})
        doubled = precompose(delta, TensorMap.scalar_multiple(C, q, 2))
        assert doubled.entry(1, 0, 1) == 6

    def test_lincomb_requires_terms(self):
        """Test that an empty combination is refused."""
        with pytest.raises(EmptyInput):
            lincomb([])

    def test_lincomb_requires_equal_signatures(self, q):
        """Test that maps of different arity cannot be combined."""
        with pytest.raises(SignatureMismatch):
            add(identity(C, q), TensorMap.zeros(C, (C, C), q))

    def test_inverse_over_rationals(self, q):
        """Test the exact inverse of diag(1, 2)."""
        f = TensorMap.diagonal(C, q, [1, 2])
        assert matrix_inverse(f) == TensorMap.diagonal(C, q, [1, Fraction(1, 2)])
        assert compose(f, matrix_inverse(f)) == identity(C, q)

    def test_inverse_over_prime_field(self, f5):
        """Test that 2 and 3 are mutually inverse in F5."""
        f = TensorMap.diagonal(C, f5, [2, 3])
        assert matrix_inverse(f) == TensorMap.diagonal(C, f5, [3, 2])

    def test_singular_matrix(self, q, f5):
        """Test that singular maps raise and report non-invertible."""
        with pytest.raises(SingularMatrix):
            matrix_inverse(TensorMap.zeros(C, (C,), q))
        assert not is_invertible(TensorMap.diagonal(C, f5, [1, 5]))

    def test_matrix_power(self, q):
        """Test positive, zero and negative powers."""
        f = TensorMap.diagonal(C, q, [1, 2])
        assert matrix_power(f, 3) == TensorMap.diagonal(C, q, [1, 8])
        assert matrix_power(f, 0) == identity(C, q)
        assert matrix_power(f, -1) == TensorMap.diagonal(C, q, [1, Fraction(1, 2)])

    def test_kron_of_identities(self, q):
        """Test that id⊗id is the identity of the product space."""
        product = kron(identity(C, q), identity(C, q))
        assert product.dom.dim == 4
        assert np.array_equal(product.coeffs, identity(product.dom, q).coeffs)

    def test_kron_arity_mismatch(self, q):
        """Test that factors of different arity are refused."""
        with pytest.raises(SignatureMismatch):
            kron(identity(C, q), TensorMap.zeros(C, (C, C), q))


matrices = st.lists(st.integers(-20, 20), min_size=4, max_size=4)


@pytest.mark.property
class TestCalculusProperties:
    """Property tests over F5 and Q."""

    @given(matrices, matrices)
    @settings(max_examples=50, deadline=None)
    def test_sub_inverts_add(self, a, b):
        """Test that (a + b) - b = a over F5."""
        field = FieldSpec.prime(5)
        first = TensorMap.from_matrix(C, field, [a[:2], a[2:]])
        second = TensorMap.from_matrix(C, field, [b[:2], b[2:]])
        assert sub(add(first, second), second) == first

    @given(matrices)
    @settings(max_examples=50, deadline=None)
    def test_tau_is_an_involution(self, values):
        """Test that τ∘τ∘Δ = Δ over Q."""
        field = FieldSpec.rationals()
        rows = {1: [(values[0], (1, 2)), (values[1], (2, 2))], 2: [(values[2], (1, 1)), (values[3], (2, 1))]}
        delta = TensorMap.from_rows(C, (C, C), field, rows)
        assert permute(TAU, permute(TAU, delta)) == delta
