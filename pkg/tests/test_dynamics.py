import numpy as np
import pytest

from xychain import (
    ChainSpec,
    analytic_homogeneous,
    build_chain,
    diagonalize,
    evolve,
    initial_excited_state,
    stationarity_report,
)


class TestInitialState:
    def test_projector(self, hom41):
        state = initial_excited_state(hom41, 5)
        state.validate()
        assert abs(np.trace(state.rho) - 1.0) < 1e-12
        evals = np.linalg.eigvalsh(state.rho)
        assert np.sum(evals > 1e-12) == 1  # rank one

    def test_diagonal_equals_stationary_weights(self, hom41):
        from xychain import stationary_profile

        state = initial_excited_state(hom41, 7)
        weights = stationary_profile(hom41, "excited", 7).weights
        assert np.abs(np.real(np.diagonal(state.rho)) - weights).max() < 1e-14

    def test_n3_matrix_from_sine_products(self):
        # hand evaluation: amplitudes of site 1 across the three modes are
        # sin(pi k/4)/sqrt(2) = (1/2, 1/sqrt(2), 1/2)
        dec = analytic_homogeneous(3)
        state = initial_excited_state(dec, 1)
        amps = np.array([0.5, np.sqrt(0.5), 0.5])
        assert np.abs(state.rho - np.outer(amps, amps)).max() < 1e-14

    def test_out_of_range(self, hom41):
        with pytest.raises(ValueError):
            initial_excited_state(hom41, 0)


class TestEvolve:
    def test_tau_zero_is_identity(self, hom41):
        state = initial_excited_state(hom41, 7)
        later = evolve(state, 0.0)
        assert np.array_equal(later.rho, state.rho)

    def test_moduli_preserved(self, hom41):
        state = initial_excited_state(hom41, 7)
        for tau in (0.3, 4.0, 77.7):
            later = evolve(state, tau)
            assert np.abs(np.abs(later.rho) - np.abs(state.rho)).max() < 1e-13
            later.validate()

    def test_rank_one_factorization_holds_along_the_orbit(self, hom41):
        state = evolve(initial_excited_state(hom41, 3), 11.3)
        diag = np.real(np.diagonal(state.rho))
        assert np.abs(np.abs(state.rho) ** 2 - np.outer(diag, diag)).max() < 1e-13

    def test_degenerate_modes_keep_constant_coherence(self):
        eigenvalues = np.array([0.5, 0.5, -0.5])
        rho = np.full((3, 3), 1 / 3, dtype=complex)
        from xychain import EigenbasisState

        state = EigenbasisState(rho=rho, eigenvalues=eigenvalues)
        later = evolve(state, 17.0)
        assert abs(later.rho[0, 1] - rho[0, 1]) < 1e-15

    def test_composition(self, hom41):
        state = initial_excited_state(hom41, 2)
        assert np.abs(evolve(evolve(state, 1.5), 2.5).rho - evolve(state, 4.0).rho).max() < 1e-12

    def test_singular_values_preserved(self, hom41):
        state = initial_excited_state(hom41, 9)
        later = evolve(state, 8.1)
        assert np.abs(np.linalg.svd(later.rho, compute_uv=False)
                      - np.linalg.svd(state.rho, compute_uv=False)).max() < 1e-12


class TestStationarityReport:
    def test_single_tau_zero(self, hom41):
        report = stationarity_report(hom41, "excited", 7, taus=[0.0])
        assert report.max_deviation == 0.0

    def test_excited_homogeneous(self, hom41):
        report = stationarity_report(hom41, "excited", 7)
        assert report.max_deviation <= 1e-12

    def test_polarized_homogeneous(self, hom41):
        report = stationarity_report(hom41, "polarized", 14, beta=10.0)
        assert report.max_deviation <= 1e-12

    def test_engineered_chain(self):
        dec = diagonalize(build_chain(ChainSpec(21, "cdel")))
        report = stationarity_report(dec, "excited", 4, taus=[0.0, 1.0, 10.0, 100.0])
        assert report.max_deviation <= 1e-12

    def test_requires_taus(self, hom41):
        with pytest.raises(ValueError, match="tau"):
            stationarity_report(hom41, "excited", 7, taus=[])
