from dataclasses import dataclass
from typing import Tuple
import math

import numpy as np
import scipy.linalg

from ..arrays import max_norm, readonly, require_square
from ..errors import ConfigurationError, NonPositiveSpectrumError
from ..logging import get_logger
from .config import BoundaryCondition, LatticeConfig
from .operators import build_kinetic

logger = get_logger(__name__)

SIGN_THRESHOLD = 1e-12


@dataclass(frozen=True)
class KineticSpectrum:
    """Eigenvalues a_1 < ... < a_n of K with orthonormal eigenvectors in the columns of V."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    operator: np.ndarray

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def energies(self) -> np.ndarray:
        return np.sqrt(self.eigenvalues)

    def sqrt_operator(self) -> np.ndarray:
        """K^{1/2} assembled from the spectral resolution."""
        v = self.eigenvectors
        return (v * np.sqrt(self.eigenvalues)) @ v.T

    def residual(self) -> float:
        v = self.eigenvectors
        return max_norm(self.operator @ v - v * self.eigenvalues)

    def orthogonality_defect(self) -> float:
        v = self.eigenvectors
        return max_norm(v.T @ v - np.eye(self.n))


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    # first component above threshold is made positive, column by column
    for j in range(vectors.shape[1]):
        column = vectors[:, j]
        idx = np.flatnonzero(np.abs(column) > SIGN_THRESHOLD)
        if idx.size and column[idx[0]] < 0:
            vectors[:, j] = -column
    return vectors


def eigendecompose(kinetic: np.ndarray) -> KineticSpectrum:
    kinetic = require_square(np.asarray(kinetic, dtype=np.float64), "K")
    if not np.allclose(kinetic, kinetic.T, rtol=0.0, atol=1e-12 * max(1.0, max_norm(kinetic))):
        raise ConfigurationError(f"K must be symmetric, asymmetry {max_norm(kinetic - kinetic.T):.3e}")

    eigenvalues, eigenvectors = scipy.linalg.eigh(kinetic)
    eigenvectors = _fix_signs(eigenvectors)

    tolerance = 1e-12 * max(1.0, max_norm(kinetic))
    if eigenvalues[0] <= tolerance:
        raise NonPositiveSpectrumError(f"Smallest kinetic eigenvalue {eigenvalues[0]:.3e} is not positive; energies would not be real")

    spectrum = KineticSpectrum(
        eigenvalues=readonly(eigenvalues),
        eigenvectors=readonly(eigenvectors),
        operator=readonly(kinetic),
    )
    logger.debug(f"Lattice: eigendecomposition n={spectrum.n} residual={spectrum.residual():.2e} orthogonality={spectrum.orthogonality_defect():.2e}")
    return spectrum


def kinetic_spectrum(cfg: LatticeConfig) -> KineticSpectrum:
    spectrum = eigendecompose(build_kinetic(cfg))
    logger.debug(f"Lattice: n={cfg.n} h={cfg.h} m={cfg.m} bc={cfg.bc.value} a_min={spectrum.eigenvalues[0]:.6g} a_max={spectrum.eigenvalues[-1]:.6g}")
    return spectrum


def dirichlet_eigenvalue_exact(j: int, cfg: LatticeConfig) -> float:
    if cfg.bc is not BoundaryCondition.DIRICHLET:
        raise ConfigurationError("dirichlet_eigenvalue_exact requires a Dirichlet lattice")
    if not 1 <= j <= cfg.n:
        raise ConfigurationError(f"Mode index j must be in [1, {cfg.n}], got {j}")
    return (2.0 - 2.0 * math.cos(j * math.pi / (cfg.n + 1))) / cfg.h**2 + cfg.m**2


def periodic_eigenvalue_exact(j: int, cfg: LatticeConfig) -> float:
    if cfg.bc is not BoundaryCondition.PERIODIC:
        raise ConfigurationError("periodic_eigenvalue_exact requires a periodic lattice")
    if not 0 <= j < cfg.n:
        raise ConfigurationError(f"Mode index j must be in [0, {cfg.n - 1}], got {j}")
    return (2.0 - 2.0 * math.cos(2.0 * math.pi * j / cfg.n)) / cfg.h**2 + cfg.m**2


def continuum_dispersion(k: float, m: float) -> Tuple[float, float]:
    energy = math.hypot(k, m)
    return energy, -energy
