import numpy as np

from ..arrays import require_square
from ..errors import BasisMismatchError, IllConditionedError, NotPositiveError
from ..feshbach_villars.hamiltonian import build_hamiltonian
from ..logging import get_logger
from .operator import MetricOperator, dieudonne_residual, symmetric_sqrt

logger = get_logger(__name__)

MAX_OMEGA_CONDITION = 1e12
DIEUDONNE_TOLERANCE = 1e-8


def factorize_omega(metric: MetricOperator) -> np.ndarray:
    """Symmetric positive square root Ω = Θ^{1/2}, so Ω = Ωᵀ and ΩᵀΩ = Θ."""
    if not metric.positive:
        raise NotPositiveError("Metric is not positive definite; no factorization Θ = ΩᵀΩ exists")
    return metric.omega


def omega_condition_number(metric: MetricOperator) -> float:
    eigvals = metric.eigenvalues
    if eigvals[0] <= 0:
        return float("inf")
    return float(np.sqrt(eigvals[-1] / eigvals[0]))


def hermitize(kinetic: np.ndarray, metric: MetricOperator) -> np.ndarray:
    """Equivalent Hermitian Hamiltonian h = ΩHΩ⁻¹ with H built from K in the metric's basis."""
    omega = factorize_omega(metric)
    kinetic = require_square(kinetic, "K")
    hamiltonian = build_hamiltonian(kinetic)
    if hamiltonian.shape != metric.theta.shape:
        raise BasisMismatchError(f"H of shape {hamiltonian.shape} does not match metric of shape {metric.theta.shape}")

    residual = dieudonne_residual(hamiltonian, metric.theta)
    if residual > DIEUDONNE_TOLERANCE:
        raise BasisMismatchError(f"Metric does not solve HᵀΘ = ΘH for this K (residual {residual:.3e}); check the basis")

    condition = omega_condition_number(metric)
    if condition > MAX_OMEGA_CONDITION:
        raise IllConditionedError(f"Omega condition number {condition:.3e} exceeds {MAX_OMEGA_CONDITION:.0e}")
    if condition > 1e8:
        logger.warning(f"Metric: Omega condition number {condition:.3e}, expect loss of hermiticity")

    omega_inv = symmetric_sqrt(metric.theta, inverse=True)
    return omega @ hamiltonian @ omega_inv


def hermiticity_residual(h: np.ndarray) -> float:
    """‖h - hᵀ‖ relative to ‖h‖ in the max norm."""
    scale = float(np.max(np.abs(h)))
    return float(np.max(np.abs(h - h.T))) / scale if scale else 0.0
