from typing import Optional

import numpy as np

from ..errors import BasisMismatchError, DimensionMismatchError
from ..feshbach_villars.state import TwoComponentState
from ..lattice.spectrum import KineticSpectrum
from .operator import MetricBasis, MetricOperator
from .params import MetricParams


def _to_metric_basis(
    state: TwoComponentState,
    metric: MetricOperator,
    state_basis: Optional[MetricBasis],
    spectrum: Optional[KineticSpectrum],
) -> TwoComponentState:
    if state.n != metric.n:
        raise DimensionMismatchError(f"State dimension {state.n} does not match metric dimension {metric.n}")
    if state_basis is None or MetricBasis(state_basis) is metric.basis:
        return state
    if spectrum is None:
        raise BasisMismatchError(f"State is in the {MetricBasis(state_basis).value} basis but metric is in the {metric.basis.value} basis")
    v = np.asarray(spectrum.eigenvectors)
    return state.rotated(v.T) if metric.basis is MetricBasis.KINETIC_EIGENBASIS else state.rotated(v)


def inner_product(
    metric: MetricOperator,
    x: TwoComponentState,
    y: TwoComponentState,
    state_basis: Optional[MetricBasis] = None,
    spectrum: Optional[KineticSpectrum] = None,
) -> complex:
    """⟨⟨x|y⟩ = x†Θy, antilinear in x.

    States are taken to be in the metric's basis unless `state_basis` says otherwise, in which
    case `spectrum` supplies the rotation.
    """
    x = _to_metric_basis(x, metric, state_basis, spectrum)
    y = _to_metric_basis(y, metric, state_basis, spectrum)
    return complex(np.vdot(x.vector, metric.theta @ y.vector))


def metric_norm(metric: MetricOperator, state: TwoComponentState, **kwargs) -> float:
    return inner_product(metric, state, state, **kwargs).real


def inner_product_explicit(params: MetricParams, spectrum: KineticSpectrum, x: TwoComponentState, y: TwoComponentState) -> complex:
    """Three-sum form over kinetic-eigenbasis coordinates.

    Σα_i x*_i y_i + Σβ̃_i (x*_i y_{n+i} + x*_{n+i} y_i) + Σa_iα_i x*_{n+i} y_{n+i}
    """
    if x.n != spectrum.n or y.n != spectrum.n:
        raise DimensionMismatchError(f"States of dimension {x.n} and {y.n} do not match spectrum dimension {spectrum.n}")
    alphas, betas = params.mode_blocks(spectrum)
    a = np.asarray(spectrum.eigenvalues)
    xu, xl = x.upper.conj(), x.lower.conj()
    total = np.sum(alphas * xu * y.upper)
    total += np.sum(betas * (xu * y.lower + xl * y.upper))
    total += np.sum(a * alphas * xl * y.lower)
    return complex(total)


def inner_product_wavefunction_form(
    alpha: float,
    beta: float,
    psi: np.ndarray,
    psi_dot: np.ndarray,
    phi: np.ndarray,
    phi_dot: np.ndarray,
    spectrum: KineticSpectrum,
) -> complex:
    """α(⟨ψ|K|φ⟩ + ⟨ψ̇|φ̇⟩) + iβ(⟨ψ|K^{1/2}|φ̇⟩ - ⟨ψ̇|K^{1/2}|φ⟩) in site coordinates.

    Equals x†Θy for x = (iψ̇; ψ), y = (iφ̇; φ) and the continuous-form metric.
    """
    vectors = [np.asarray(v, dtype=np.complex128) for v in (psi, psi_dot, phi, phi_dot)]
    if any(v.shape != (spectrum.n,) for v in vectors):
        raise DimensionMismatchError(f"Wave functions must all have length {spectrum.n}")
    psi, psi_dot, phi, phi_dot = vectors
    kinetic = np.asarray(spectrum.operator)
    root = spectrum.sqrt_operator()

    value = alpha * (np.vdot(psi, kinetic @ phi) + np.vdot(psi_dot, phi_dot))
    value += 1j * beta * (np.vdot(psi, root @ phi_dot) - np.vdot(psi_dot, root @ phi))
    return complex(value)
