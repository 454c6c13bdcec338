import numpy as np
import pytest
import scipy.linalg

from kleinmetric.errors import BasisMismatchError, IllConditionedError, NotPositiveError
from kleinmetric.metric import (
    MetricOperator,
    MetricParams,
    charge_metric,
    factorize_omega,
    hermiticity_residual,
    hermitize,
    metric_in_site_basis,
    omega_condition_number,
    solve_dieudonne,
)


def _expected_spectrum(spectrum):
    energies = spectrum.energies()
    return np.sort(np.concatenate([-energies, energies]))


class TestHermitize:
    def test_kinetic_basis(self, small_spectrum):
        metric = solve_dieudonne(small_spectrum, MetricParams.continuous(1.0, 0.5))
        h = hermitize(np.diag(small_spectrum.eigenvalues), metric)
        assert hermiticity_residual(h) <= 1e-12
        np.testing.assert_allclose(scipy.linalg.eigvalsh(0.5 * (h + h.T)), _expected_spectrum(small_spectrum), atol=1e-10)

    def test_site_basis(self, small_spectrum):
        metric = metric_in_site_basis(solve_dieudonne(small_spectrum, MetricParams.default(small_spectrum.n)), small_spectrum)
        h = hermitize(small_spectrum.operator, metric)
        assert hermiticity_residual(h) <= 1e-10
        np.testing.assert_allclose(scipy.linalg.eigvalsh(0.5 * (h + h.T)), _expected_spectrum(small_spectrum), atol=1e-10)

    def test_not_positive(self, small_spectrum):
        with pytest.raises(NotPositiveError):
            hermitize(small_spectrum.operator, charge_metric(small_spectrum))

    def test_basis_mismatch(self, small_spectrum):
        metric = solve_dieudonne(small_spectrum, MetricParams.default(small_spectrum.n))
        with pytest.raises(BasisMismatchError):
            hermitize(small_spectrum.operator, metric)

    def test_ill_conditioned(self):
        metric = MetricOperator(theta=np.diag([1.0, 1e-30]), basis="site", positive=True)
        with pytest.raises(IllConditionedError):
            hermitize(np.array([[1e-30]]), metric)


class TestFactorization:
    def test_omega_is_symmetric_root(self, small_spectrum):
        metric = solve_dieudonne(small_spectrum, MetricParams.continuous(2.0, 1.0))
        omega = factorize_omega(metric)
        np.testing.assert_allclose(omega.T @ omega, metric.theta, atol=1e-12)

    def test_condition_number(self, two_mode_spectrum):
        metric = solve_dieudonne(two_mode_spectrum, MetricParams.default(2))
        assert omega_condition_number(metric) == pytest.approx(2.0)

    def test_indefinite_condition_is_infinite(self, small_spectrum):
        assert omega_condition_number(charge_metric(small_spectrum)) == float("inf")


class TestHermiticityResidual:
    def test_symmetric(self):
        assert hermiticity_residual(np.array([[1.0, 2.0], [2.0, 3.0]])) == 0.0

    def test_zero_matrix(self):
        assert hermiticity_residual(np.zeros((2, 2))) == 0.0
