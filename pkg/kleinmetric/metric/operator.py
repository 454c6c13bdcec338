from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np
import scipy.linalg

from ..arrays import max_norm, readonly, require_square
from ..errors import BasisMismatchError, DimensionMismatchError
from ..feshbach_villars.hamiltonian import build_hamiltonian
from ..lattice.spectrum import KineticSpectrum
from ..logging import get_logger
from .params import MetricParams, broadcast

logger = get_logger(__name__)


class MetricBasis(str, Enum):
    KINETIC_EIGENBASIS = "kinetic_eigenbasis"
    SITE = "site"


def is_positive_definite(theta: np.ndarray) -> bool:
    """Positive-definiteness test by attempting a Cholesky factorization."""
    try:
        scipy.linalg.cholesky(theta, lower=True)
        return True
    except np.linalg.LinAlgError:
        return False


def symmetric_sqrt(theta: np.ndarray, inverse: bool = False) -> np.ndarray:
    """Unique symmetric positive square root Θ^{1/2} (or Θ^{-1/2}) from the spectral resolution."""
    eigvals, eigvecs = scipy.linalg.eigh(theta)
    roots = np.sqrt(eigvals) if not inverse else 1.0 / np.sqrt(eigvals)
    root = (eigvecs * roots) @ eigvecs.T
    return 0.5 * (root + root.T)


@dataclass(frozen=True)
class MetricOperator:
    """Hermitian metric Θ with its positivity verdict.

    `omega` is the symmetric square root of Θ, computed on first access. Any factor that
    differs from it by a left orthogonal matrix yields the same Θ = ΩᵀΩ.
    """

    theta: np.ndarray
    basis: MetricBasis
    positive: bool
    params: Optional[MetricParams] = None

    def __post_init__(self):
        theta = require_square(self.theta, "Theta")
        if theta.shape[0] % 2:
            raise DimensionMismatchError(f"Metric dimension must be even, got {theta.shape[0]}")
        object.__setattr__(self, "theta", readonly(theta, dtype=np.float64))
        object.__setattr__(self, "basis", MetricBasis(self.basis))

    @property
    def n(self) -> int:
        return self.theta.shape[0] // 2

    @cached_property
    def omega(self) -> Optional[np.ndarray]:
        if not self.positive:
            return None
        return readonly(symmetric_sqrt(self.theta))

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        return readonly(scipy.linalg.eigvalsh(self.theta))


def _assemble(alphas: np.ndarray, betas: np.ndarray, lower: np.ndarray) -> np.ndarray:
    return np.block([[np.diag(alphas), np.diag(betas)], [np.diag(betas), np.diag(lower)]])


def solve_dieudonne(spectrum: KineticSpectrum, params: MetricParams) -> MetricOperator:
    """Member of the Dieudonné family in the kinetic eigenbasis.

    Θ = [[diag(α), diag(β̃)], [diag(β̃), diag(a·α)]] satisfies HᵀΘ = ΘH exactly for
    H = [[0, diag(a)], [I, 0]]. Off-diagonal couplings inside degenerate eigenspaces are not
    generated; the returned matrices form a subfamily there.
    """
    alphas, betas = params.mode_blocks(spectrum)
    theta = _assemble(alphas, betas, np.asarray(spectrum.eigenvalues) * alphas)
    metric = MetricOperator(
        theta=theta,
        basis=MetricBasis.KINETIC_EIGENBASIS,
        positive=is_positive_definite(theta),
        params=params,
    )
    logger.debug(f"Metric: n={spectrum.n} mode={params.mode.value} positive={metric.positive}")
    return metric


def hamiltonian_in_basis(spectrum: KineticSpectrum, basis: MetricBasis) -> np.ndarray:
    if MetricBasis(basis) is MetricBasis.KINETIC_EIGENBASIS:
        return build_hamiltonian(np.diag(spectrum.eigenvalues))
    return build_hamiltonian(spectrum.operator)


def _double_rotation(spectrum: KineticSpectrum) -> np.ndarray:
    v = np.asarray(spectrum.eigenvectors)
    return scipy.linalg.block_diag(v, v)


def metric_in_site_basis(metric: MetricOperator, spectrum: KineticSpectrum) -> MetricOperator:
    if metric.basis is not MetricBasis.KINETIC_EIGENBASIS:
        raise BasisMismatchError(f"Expected a metric in the kinetic eigenbasis, got {metric.basis.value}")
    if metric.n != spectrum.n:
        raise DimensionMismatchError(f"Metric dimension {metric.n} does not match spectrum dimension {spectrum.n}")
    rotation = _double_rotation(spectrum)
    theta = rotation @ metric.theta @ rotation.T
    return MetricOperator(
        theta=0.5 * (theta + theta.T),
        basis=MetricBasis.SITE,
        positive=metric.positive,
        params=metric.params,
    )


def metric_in_kinetic_basis(metric: MetricOperator, spectrum: KineticSpectrum) -> MetricOperator:
    if metric.basis is MetricBasis.KINETIC_EIGENBASIS:
        return metric
    if metric.n != spectrum.n:
        raise DimensionMismatchError(f"Metric dimension {metric.n} does not match spectrum dimension {spectrum.n}")
    rotation = _double_rotation(spectrum)
    theta = rotation.T @ metric.theta @ rotation
    return MetricOperator(
        theta=0.5 * (theta + theta.T),
        basis=MetricBasis.KINETIC_EIGENBASIS,
        positive=metric.positive,
        params=metric.params,
    )


def dieudonne_residual(hamiltonian: np.ndarray, theta: np.ndarray) -> float:
    """Relative residual ‖HᵀΘ - ΘH‖ / (‖H‖·‖Θ‖) in the max norm."""
    hamiltonian = require_square(hamiltonian, "H")
    theta = require_square(theta, "Theta")
    if hamiltonian.shape != theta.shape:
        raise DimensionMismatchError(f"H has shape {hamiltonian.shape} but Theta has {theta.shape}")
    scale = max_norm(hamiltonian) * max_norm(theta)
    if scale == 0:
        return 0.0
    return max_norm(hamiltonian.T @ theta - theta @ hamiltonian) / scale


def metric_from_branch_weights(
    spectrum: KineticSpectrum,
    alpha_plus: Union[float, Sequence[float]],
    alpha_minus: Union[float, Sequence[float]],
) -> MetricOperator:
    """Θ = Σ_n α⁺_n|Φ_n⁺⟩⟨Φ_n⁺| + α⁻_n|Φ_n⁻⟩⟨Φ_n⁻| summed over the adjoint eigenvectors (site basis)."""
    plus = broadcast(alpha_plus, spectrum.n, "alpha_plus")
    minus = broadcast(alpha_minus, spectrum.n, "alpha_minus")
    v = np.asarray(spectrum.eigenvectors)
    roots = np.sqrt(spectrum.eigenvalues)
    phi_plus = np.vstack([v, v * roots])
    phi_minus = np.vstack([v, -v * roots])
    theta = (phi_plus * plus) @ phi_plus.T + (phi_minus * minus) @ phi_minus.T

    if np.ndim(alpha_plus) == 0 and np.ndim(alpha_minus) == 0:
        params = MetricParams.from_branch_weights(float(alpha_plus), float(alpha_minus))
    else:
        params = MetricParams(alphas=plus + minus, betas=(plus - minus) * roots)

    theta = 0.5 * (theta + theta.T)
    return MetricOperator(theta=theta, basis=MetricBasis.SITE, positive=is_positive_definite(theta), params=params)


def charge_metric(spectrum: KineticSpectrum) -> MetricOperator:
    """Θ = [[0, I], [I, 0]], the conserved but indefinite Klein-Gordon charge i(ψ*φ̇ - ψ̇*φ).

    The form is basis independent, so the site-basis matrix equals the eigenbasis one.
    """
    n = spectrum.n
    eye = np.eye(n)
    zero = np.zeros((n, n))
    theta = np.block([[zero, eye], [eye, zero]])
    return MetricOperator(theta=theta, basis=MetricBasis.SITE, positive=False, params=MetricParams.charge_form(n))


def theta_condition_number(metric: MetricOperator) -> float:
    magnitudes = np.abs(metric.eigenvalues)
    smallest = float(np.min(magnitudes))
    if smallest == 0:
        return float("inf")
    return float(np.max(magnitudes)) / smallest
