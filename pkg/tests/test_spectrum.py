from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinshare.errors import DomainError, ValidityError
from spinshare.spectrum import (
    EnsembleSpec,
    PseudopureState,
    Run,
    Spectrum,
    bias_from_f,
    f_from_bias,
    make_product_state,
    make_thermal_state,
    overlap_f,
    pseudopurify,
    reduce_by_blocking,
)

from conftest import SIGMA_GRID, probability_vector

F = Fraction


def runs(*pairs):
    return tuple(Run(F(v), c) for v, c in pairs)


def spectrum_of(rng: random.Random, qubits: int) -> Spectrum:
    return Spectrum.from_pairs(
        qubits, [(v, 1) for v in probability_vector(rng, 1 << qubits)]
    )


class TestSpectrumInvariants:
    def test_requires_unit_trace(self):
        with pytest.raises(DomainError):
            Spectrum(1, runs((F(1, 2), 2)))

    def test_requires_full_dimension(self):
        with pytest.raises(DomainError):
            Spectrum(2, runs((F(1, 2), 2)))

    def test_requires_descending_runs(self):
        with pytest.raises(DomainError):
            Spectrum(1, runs((F(1, 4), 1), (F(3, 4), 1)))

    def test_rejects_negative_values(self):
        with pytest.raises(DomainError):
            Spectrum(1, runs((F(5, 4), 1), (F(-1, 4), 1)))

    def test_from_pairs_sorts_and_merges(self):
        s = Spectrum.from_pairs(2, [(F(1, 8), 2), (F(3, 8), 1), (F(1, 8), 0), (F(3, 8), 1)])
        assert s.runs == runs((F(3, 8), 2), (F(1, 8), 2))

    def test_zero_eigenvalues_keep_dimension(self):
        s = Spectrum.pure(3)
        assert s.runs == runs((1, 1), (0, 7))
        assert s.dimension == 8

    @given(st.integers(0, 8), st.randoms(use_true_random=False))
    def test_random_spectra_validate(self, qubits, rng):
        s = spectrum_of(rng, qubits)
        assert sum(c for _, c in s.runs) == s.dimension
        assert sum(v * c for v, c in s.runs) == 1
        values = [v for v, _ in s.runs]
        assert values == sorted(values, reverse=True)
        assert len(set(values)) == len(values)


class TestMakeProductState:
    def test_two_pure_spins(self):
        s = make_product_state(EnsembleSpec(2, 2, F(1)))
        assert s.runs == runs((1, 1), (0, 3))

    def test_two_pure_spins_of_four(self):
        s = make_product_state(EnsembleSpec(4, 2, F(1)))
        assert s.runs == runs((F(1, 4), 4), (0, 12))

    def test_half_polarized_single_spin(self):
        s = make_product_state(EnsembleSpec(2, 1, F(1, 2)))
        assert s.runs == runs((F(3, 8), 2), (F(1, 8), 2))

    def test_half_polarized_pair_with_binomial_multiplicities(self):
        s = make_product_state(EnsembleSpec(4, 2, F(1, 2)))
        assert s.runs == runs((F(9, 64), 4), (F(3, 64), 8), (F(1, 64), 4))

    def test_zero_polarization_collapses_to_single_run(self):
        s = make_product_state(EnsembleSpec(3, 2, F(0)))
        assert s == Spectrum.maximally_mixed(3)

    def test_no_polarized_spins(self):
        s = make_product_state(EnsembleSpec(5, 0, F(1)))
        assert s == Spectrum.maximally_mixed(5)

    def test_rejects_bad_polarization(self):
        with pytest.raises(DomainError):
            EnsembleSpec(2, 1, F(3, 2))
        with pytest.raises(DomainError):
            EnsembleSpec(2, 3, F(1, 2))


class TestMakeThermalState:
    def test_single_spin(self):
        s = make_thermal_state(1, F(1, 10))
        assert s.runs == runs((F(21, 40), 1), (F(19, 40), 1))

    def test_two_spins(self):
        s = make_thermal_state(2, F(1, 10))
        assert s.runs == runs((F(11, 40), 1), (F(1, 4), 2), (F(9, 40), 1))

    def test_zero_bias_is_maximally_mixed(self):
        assert make_thermal_state(1, F(0)) == Spectrum.maximally_mixed(1)
        assert make_thermal_state(4, F(0), half_factor=False) == Spectrum.maximally_mixed(4)

    def test_conventions_differ_by_factor_two(self):
        half = make_thermal_state(3, F(1, 10), half_factor=True)
        full = make_thermal_state(3, F(1, 20), half_factor=False)
        assert half == full

    def test_rejects_negative_eigenvalues(self):
        with pytest.raises(ValidityError):
            make_thermal_state(3, F(2))

    def test_rejects_zero_qubits(self):
        with pytest.raises(DomainError):
            make_thermal_state(0, F(1, 10))


class TestReduceByBlocking:
    def test_two_pure_of_four_down_to_three(self):
        s = make_product_state(EnsembleSpec(4, 2, F(1)))
        assert reduce_by_blocking(s, 3).runs == runs((F(1, 2), 2), (0, 6))

    def test_two_pure_of_four_down_to_two(self):
        s = make_product_state(EnsembleSpec(4, 2, F(1)))
        assert reduce_by_blocking(s, 2).runs == runs((1, 1), (0, 3))

    def test_identity_blocking(self):
        s = make_product_state(EnsembleSpec(3, 1, F(1, 4)))
        assert reduce_by_blocking(s, 3) is s

    def test_half_polarized_pair_to_single_qubit(self):
        s = make_product_state(EnsembleSpec(2, 2, F(1, 2)))
        assert reduce_by_blocking(s, 1).runs == runs((F(3, 4), 1), (F(1, 4), 1))

    def test_rejects_growth(self):
        with pytest.raises(DomainError):
            reduce_by_blocking(Spectrum.maximally_mixed(2), 3)

    @given(
        st.integers(0, 8),
        st.integers(0, 8),
        st.randoms(use_true_random=False),
    )
    def test_trace_and_dimension_preserved(self, qubits, keep, rng):
        keep = min(keep, qubits)
        s = spectrum_of(rng, qubits)
        reduced = reduce_by_blocking(s, keep)
        assert reduced.qubits == keep
        assert sum(v * c for v, c in reduced.runs) == 1

    @given(st.integers(1, 8), st.randoms(use_true_random=False))
    def test_leading_block_dominance(self, qubits, rng):
        # Largest output eigenvalue equals the top-block sum of the input.
        s = spectrum_of(rng, qubits)
        for keep in range(qubits + 1):
            reduced = reduce_by_blocking(s, keep)
            assert reduced.max_eigenvalue == s.top_sum(1 << (qubits - keep))

    @given(st.integers(1, 7), st.randoms(use_true_random=False))
    def test_block_sums_descend(self, qubits, rng):
        s = spectrum_of(rng, qubits)
        for keep in range(qubits + 1):
            dense = reduce_by_blocking(s, keep).expand()
            assert list(dense) == sorted(dense, reverse=True)


class TestPseudopurify:
    def test_flattens_trailing_eigenvalues(self):
        s = Spectrum.from_pairs(3, [(F(1, 2), 2), (F(0), 6)])
        state, spectrum = pseudopurify(s)
        assert state == PseudopureState(3, F(3, 7))
        assert spectrum.runs == runs((F(1, 2), 1), (F(1, 14), 7))

    def test_maximally_mixed_fixed_point(self):
        s = Spectrum.maximally_mixed(4)
        state, spectrum = pseudopurify(s)
        assert state.delta == 0
        assert spectrum == s

    def test_pure_fixed_point(self):
        state, spectrum = pseudopurify(Spectrum.pure(5))
        assert state.delta == 1
        assert spectrum == Spectrum.pure(5)

    def test_rejects_zero_qubits(self):
        with pytest.raises(DomainError):
            pseudopurify(Spectrum.from_pairs(0, [(F(1), 1)]))

    @given(st.integers(1, 8), st.randoms(use_true_random=False))
    def test_idempotent_and_preserving(self, qubits, rng):
        s = spectrum_of(rng, qubits)
        state, once = pseudopurify(s)
        again_state, twice = pseudopurify(once)
        assert once == twice
        assert state == again_state
        assert once.max_eigenvalue == s.max_eigenvalue
        assert sum(v * c for v, c in once.runs) == 1

    @given(st.integers(1, 8), st.randoms(use_true_random=False))
    def test_output_has_at_most_two_runs(self, qubits, rng):
        _, spectrum = pseudopurify(spectrum_of(rng, qubits))
        assert len(spectrum.runs) <= 2


class TestOverlap:
    def test_pure_case(self):
        assert overlap_f(EnsembleSpec(4, 2, F(1)), 3) == F(1, 2)

    def test_partial_case(self):
        assert overlap_f(EnsembleSpec(4, 2, F(1, 2)), 3) == F(9, 32)

    def test_concentration_case(self):
        assert overlap_f(EnsembleSpec(2, 2, F(1, 2)), 1) == F(3, 4)

    def test_self_overlap_is_one(self):
        assert overlap_f(EnsembleSpec(3, 3, F(1)), 3) == 1

    def test_rejects_k_zero(self):
        with pytest.raises(DomainError):
            overlap_f(EnsembleSpec(3, 2, F(1)), 0)

    def test_equals_leading_eigenvalue_after_blocking(self):
        for n in range(1, 7):
            for p in range(n + 1):
                for sigma in SIGMA_GRID:
                    spec = EnsembleSpec(n, p, sigma)
                    s = make_product_state(spec)
                    for k in range(1, n + 1):
                        assert overlap_f(spec, k) == reduce_by_blocking(s, k).max_eigenvalue

    def test_monotone_in_k(self):
        # f never grows when the subspace widens; bias never grows past k = p.
        for n in range(2, 9):
            for p in range(n + 1):
                for sigma in (F(1, 10), F(1, 2), F(1)):
                    spec = EnsembleSpec(n, p, sigma)
                    fs = [overlap_f(spec, k) for k in range(1, n + 1)]
                    assert all(a >= b for a, b in zip(fs, fs[1:]))
                    deltas = [
                        bias_from_f(overlap_f(spec, k), k) for k in range(max(p, 1), n + 1)
                    ]
                    assert all(a >= b for a, b in zip(deltas, deltas[1:]))


class TestBiasConversions:
    @pytest.mark.parametrize(
        "f,k,expected",
        [
            (F(1, 2), 3, F(3, 7)),
            (F(1), 5, F(1)),
            (F(9, 32), 3, F(5, 28)),
            (F(1, 8), 3, F(0)),
        ],
    )
    def test_bias_from_f(self, f, k, expected):
        assert bias_from_f(f, k) == expected

    def test_rejects_f_below_floor(self):
        with pytest.raises(DomainError):
            bias_from_f(F(1, 16), 3)

    @given(
        st.integers(1, 12),
        st.fractions(min_value=0, max_value=1, max_denominator=1000),
    )
    def test_round_trip_identity(self, k, delta):
        assert bias_from_f(f_from_bias(delta, k), k) == delta

    @given(st.integers(1, 10), st.randoms(use_true_random=False))
    def test_pseudopure_state_spectrum_round_trip(self, k, rng):
        delta = F(rng.randint(0, 100), 100)
        state = PseudopureState(k, delta)
        restate, _ = pseudopurify(state.spectrum())
        assert restate == state
