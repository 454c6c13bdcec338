import numpy as np
import pytest
import scipy.linalg

from kleinmetric.errors import NonPositiveSpectrumError
from kleinmetric.evolution import evolution_operator, mode_propagator, sin_over_energy
from kleinmetric.feshbach_villars import build_hamiltonian
from kleinmetric.metric import MetricParams, metric_in_site_basis, solve_dieudonne


class TestSinOverEnergy:
    def test_regular(self):
        assert sin_over_energy(np.array([2.0]), 0.5)[0] == pytest.approx(np.sin(1.0) / 2.0)

    def test_small_phase_uses_series(self):
        value = sin_over_energy(np.array([1e-8]), 1.0)[0]
        assert value == pytest.approx(1.0, rel=1e-15)

    def test_zero_energy_limit(self):
        assert sin_over_energy(np.array([0.0]), 3.0)[0] == 3.0


class TestModePropagator:
    @pytest.mark.parametrize("a,t", [(1.0, 0.3), (4.0, 2.5), (0.01, 10.0)])
    def test_matches_matrix_exponential(self, a, t):
        block = np.array([[0.0, a], [1.0, 0.0]])
        np.testing.assert_allclose(mode_propagator(a, t), scipy.linalg.expm(-1j * t * block), atol=1e-12)

    def test_identity_at_zero(self):
        np.testing.assert_array_equal(mode_propagator(2.0, 0.0), np.eye(2))

    def test_rejects_non_positive(self):
        with pytest.raises(NonPositiveSpectrumError):
            mode_propagator(0.0, 1.0)


class TestEvolutionOperator:
    def test_matches_dense_exponential(self, small_spectrum):
        h = build_hamiltonian(small_spectrum.operator)
        np.testing.assert_allclose(evolution_operator(small_spectrum, 1.7), scipy.linalg.expm(-1j * 1.7 * h), atol=1e-10)

    def test_group_property(self, small_spectrum):
        u1 = evolution_operator(small_spectrum, 0.4)
        u2 = evolution_operator(small_spectrum, 0.6)
        np.testing.assert_allclose(u1 @ u2, evolution_operator(small_spectrum, 1.0), atol=1e-12)

    def test_theta_isometry(self, small_spectrum, rng):
        n = small_spectrum.n
        root_a = np.sqrt(small_spectrum.eigenvalues)
        for _ in range(20):
            alphas = rng.uniform(0.5, 2.0, n)
            per_mode = MetricParams(alphas=alphas, betas=0.9 * rng.uniform(-1.0, 1.0, n) * root_a * alphas)
            alpha = float(rng.uniform(0.5, 2.0))
            continuous = MetricParams.continuous(alpha, 0.9 * float(rng.uniform(-1.0, 1.0)) * alpha)
            t = float(rng.uniform(0.0, 10.0))
            u = evolution_operator(small_spectrum, t)
            for params in (per_mode, continuous):
                theta = metric_in_site_basis(solve_dieudonne(small_spectrum, params), small_spectrum).theta
                assert np.max(np.abs(u.conj().T @ theta @ u - theta)) <= 2 * n * 1e-10
