from typing import Optional

import numpy as np

from ..errors import ConfigurationError, NotPositiveError
from ..feshbach_villars.eigenpairs import eigenstate
from ..feshbach_villars.state import TwoComponentState
from ..lattice.config import BoundaryCondition, LatticeConfig
from ..lattice.operators import grid_coordinates
from ..lattice.spectrum import KineticSpectrum, kinetic_spectrum
from ..metric.inner_product import metric_norm
from ..metric.operator import MetricBasis, MetricOperator, metric_in_site_basis, solve_dieudonne
from ..metric.params import MetricParams


def default_metric(spectrum: KineticSpectrum) -> MetricOperator:
    """Θ = I ⊕ K in the site basis."""
    return metric_in_site_basis(solve_dieudonne(spectrum, MetricParams.default(spectrum.n)), spectrum)


def normalize(state: TwoComponentState, metric: MetricOperator, spectrum: KineticSpectrum) -> TwoComponentState:
    """Rescale a site-basis state to unit Θ-norm."""
    if not metric.positive:
        raise NotPositiveError("Normalization requires a positive definite metric")
    norm = metric_norm(metric, state, state_basis=MetricBasis.SITE, spectrum=spectrum)
    return state.scaled(1.0 / np.sqrt(norm))


def gaussian_packet(
    cfg: LatticeConfig,
    x0: float,
    sigma: float,
    k0: float = 0.0,
    metric: Optional[MetricOperator] = None,
    spectrum: Optional[KineticSpectrum] = None,
) -> TwoComponentState:
    """Positive-energy wave packet with a Gaussian profile ψ(x) = exp(-(x-x0)²/(2σ²))·exp(ik0x).

    The upper component is K^{1/2}ψ, so every mode sits on the positive branch. The result is
    normalized to unit Θ-norm (Θ = I ⊕ K when no metric is given).

    Example:
        >>> cfg = LatticeConfig(n=256, h=0.1, m=1.0)
        >>> packet = gaussian_packet(cfg, x0=12.85, sigma=1.0, k0=2.0)
    """
    if not sigma > 0:
        raise ConfigurationError(f"Packet width sigma must be positive, got {sigma}")
    if sigma < cfg.h / 2:
        raise ConfigurationError(f"Packet width sigma={sigma} is below h/2={cfg.h / 2} and cannot be resolved")
    if cfg.bc is BoundaryCondition.DIRICHLET and not 0 < x0 < cfg.length:
        raise ConfigurationError(f"Packet centre x0={x0} lies outside the open interval (0, {cfg.length})")
    if cfg.bc is BoundaryCondition.PERIODIC and not 0 <= x0 < cfg.length:
        raise ConfigurationError(f"Packet centre x0={x0} lies outside the ring [0, {cfg.length})")

    spectrum = spectrum if spectrum is not None else kinetic_spectrum(cfg)
    metric = metric if metric is not None else default_metric(spectrum)

    x = grid_coordinates(cfg)
    psi = np.exp(-((x - x0) ** 2) / (2.0 * sigma**2)) * np.exp(1j * k0 * x)
    state = TwoComponentState(upper=spectrum.sqrt_operator() @ psi, lower=psi)
    return normalize(state, metric, spectrum)


def mixed_branch_state(
    spectrum: KineticSpectrum,
    mode: int,
    weights=(1.0, 1.0),
    metric: Optional[MetricOperator] = None,
) -> TwoComponentState:
    """c⁺Ψ_mode⁺ + c⁻Ψ_mode⁻ normalized to unit Θ-norm; its naive norm oscillates unless a_mode = 1."""
    plus, minus = weights
    state = eigenstate(spectrum, mode, 1).scaled(plus) + eigenstate(spectrum, mode, -1).scaled(minus)
    return normalize(state, metric if metric is not None else default_metric(spectrum), spectrum)
