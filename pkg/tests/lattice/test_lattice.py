import math

import numpy as np
import pytest

from kleinmetric.errors import ConfigurationError, DimensionMismatchError, NonPositiveSpectrumError
from kleinmetric.lattice import (
    BoundaryCondition,
    LatticeConfig,
    build_kinetic,
    build_laplacian,
    continuum_dispersion,
    dirichlet_eigenvalue_exact,
    eigendecompose,
    grid_coordinates,
    kinetic_spectrum,
    periodic_eigenvalue_exact,
)


class TestLatticeConfig:
    def test_defaults(self):
        cfg = LatticeConfig(n=4)
        assert cfg.h == 1.0
        assert cfg.m == 1.0
        assert cfg.bc is BoundaryCondition.DIRICHLET

    def test_dict_defaults_match_constructor(self):
        assert LatticeConfig.from_dict({"n": 4}) == LatticeConfig(n=4)
        assert LatticeConfig.from_dict({}).n == 64

    def test_bc_parsed_from_string(self):
        cfg = LatticeConfig(n=4, m=1.0, bc="Periodic")
        assert cfg.bc is BoundaryCondition.PERIODIC

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n": 0},
            {"n": 2.5},
            {"n": True},
            {"n": 4, "h": 0.0},
            {"n": 4, "h": -1.0},
            {"n": 4, "m": -0.1},
            {"n": 4, "m": 0.0, "bc": "periodic"},
            {"n": 4, "bc": "neumann"},
        ],
    )
    def test_invalid_raises(self, kwargs):
        with pytest.raises(ConfigurationError):
            LatticeConfig(**kwargs)

    def test_length(self):
        assert LatticeConfig(n=9, h=0.5).length == pytest.approx(5.0)
        assert LatticeConfig(n=10, h=0.5, m=1.0, bc="periodic").length == pytest.approx(5.0)

    def test_dict_round_trip(self):
        cfg = LatticeConfig(n=16, h=0.25, m=2.0, bc="periodic")
        assert LatticeConfig.from_dict(cfg.to_dict()) == cfg

    def test_from_dict_rejects_unknown_keys(self):
        with pytest.raises(ConfigurationError, match="Unknown lattice keys"):
            LatticeConfig.from_dict({"n": 4, "spacing": 1.0})


class TestOperators:
    def test_dirichlet_stencil(self):
        laplacian = build_laplacian(LatticeConfig(n=3, h=0.5))
        expected = np.array([[2.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 2.0]]) / 0.25
        np.testing.assert_array_equal(laplacian, expected)

    def test_periodic_wraps(self):
        laplacian = build_laplacian(LatticeConfig(n=4, h=1.0, m=1.0, bc="periodic"))
        assert laplacian[0, 3] == -1.0
        assert laplacian[3, 0] == -1.0
        np.testing.assert_array_equal(laplacian.sum(axis=1), np.zeros(4))

    def test_periodic_two_sites_doubles_coupling(self):
        laplacian = build_laplacian(LatticeConfig(n=2, h=1.0, m=1.0, bc="periodic"))
        np.testing.assert_array_equal(laplacian, [[2.0, -2.0], [-2.0, 2.0]])

    def test_periodic_single_site_is_flat(self):
        laplacian = build_laplacian(LatticeConfig(n=1, h=1.0, m=1.0, bc="periodic"))
        np.testing.assert_array_equal(laplacian, [[0.0]])

    def test_kinetic_adds_mass(self):
        cfg = LatticeConfig(n=5, h=0.3, m=2.0)
        np.testing.assert_allclose(build_kinetic(cfg) - build_laplacian(cfg), 4.0 * np.eye(5))

    def test_kinetic_is_symmetric(self):
        kinetic = build_kinetic(LatticeConfig(n=7, h=0.2, m=1.5, bc="periodic"))
        np.testing.assert_array_equal(kinetic, kinetic.T)

    def test_grid_coordinates(self):
        np.testing.assert_allclose(grid_coordinates(LatticeConfig(n=3, h=0.5)), [0.5, 1.0, 1.5])
        np.testing.assert_allclose(grid_coordinates(LatticeConfig(n=3, h=0.5, m=1.0, bc="periodic")), [0.0, 0.5, 1.0])


class TestSpectrum:
    def test_two_site_dirichlet(self):
        spectrum = kinetic_spectrum(LatticeConfig(n=2, h=1.0, m=0.0))
        np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 3.0], atol=1e-14)
        np.testing.assert_allclose(spectrum.energies(), [1.0, math.sqrt(3.0)], atol=1e-14)

    def test_single_site_with_mass(self):
        spectrum = kinetic_spectrum(LatticeConfig(n=1, h=1.0, m=2.0))
        np.testing.assert_allclose(spectrum.eigenvalues, [6.0])

    def test_eigenvalues_ascending_and_positive(self, small_spectrum):
        assert np.all(np.diff(small_spectrum.eigenvalues) > 0)
        assert small_spectrum.eigenvalues[0] > 0

    def test_matches_closed_form(self):
        cfg = LatticeConfig(n=12, h=0.4, m=0.7)
        spectrum = kinetic_spectrum(cfg)
        expected = [dirichlet_eigenvalue_exact(j, cfg) for j in range(1, cfg.n + 1)]
        np.testing.assert_allclose(spectrum.eigenvalues, expected, rtol=1e-12)

    def test_periodic_matches_circulant(self):
        cfg = LatticeConfig(n=10, h=0.5, m=1.0, bc="periodic")
        spectrum = kinetic_spectrum(cfg)
        expected = sorted(periodic_eigenvalue_exact(j, cfg) for j in range(cfg.n))
        np.testing.assert_allclose(spectrum.eigenvalues, expected, rtol=1e-12)

    def test_residual_and_orthogonality(self, small_spectrum):
        assert small_spectrum.residual() < 1e-12
        assert small_spectrum.orthogonality_defect() < 1e-12

    def test_sqrt_operator_squares_to_kinetic(self, small_spectrum):
        root = small_spectrum.sqrt_operator()
        np.testing.assert_allclose(root @ root, small_spectrum.operator, atol=1e-12)

    def test_sign_convention(self, small_spectrum):
        v = small_spectrum.eigenvectors
        for j in range(small_spectrum.n):
            first = v[np.flatnonzero(np.abs(v[:, j]) > 1e-12)[0], j]
            assert first > 0

    def test_arrays_are_readonly(self, small_spectrum):
        with pytest.raises(ValueError):
            small_spectrum.eigenvalues[0] = 0.0

    def test_non_positive_spectrum_raises(self):
        with pytest.raises(NonPositiveSpectrumError):
            eigendecompose(np.diag([0.0, 1.0]))

    def test_non_symmetric_raises(self):
        with pytest.raises(ConfigurationError, match="symmetric"):
            eigendecompose(np.array([[2.0, 1.0], [0.0, 2.0]]))

    def test_non_square_raises(self):
        with pytest.raises(DimensionMismatchError):
            eigendecompose(np.ones((2, 3)))

    def test_exact_eigenvalue_checks_range_and_bc(self):
        cfg = LatticeConfig(n=4)
        with pytest.raises(ConfigurationError):
            dirichlet_eigenvalue_exact(0, cfg)
        with pytest.raises(ConfigurationError):
            periodic_eigenvalue_exact(0, cfg)


class TestContinuumDispersion:
    def test_three_four_five(self):
        assert continuum_dispersion(3.0, 4.0) == (5.0, -5.0)

    def test_massless(self):
        assert continuum_dispersion(2.0, 0.0) == (2.0, -2.0)
