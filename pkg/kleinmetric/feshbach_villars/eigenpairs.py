from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from ..arrays import max_norm
from ..errors import ConfigurationError, DimensionMismatchError, NonPositiveSpectrumError
from ..lattice.spectrum import KineticSpectrum
from .state import TwoComponentState


@dataclass(frozen=True)
class FVEigenpair:
    """Eigenvector Ψ of H and its partner Φ of Hᵀ for the kinetic mode `mode` (0-based)."""

    energy: float
    vector: TwoComponentState
    adjoint_vector: TwoComponentState
    sign: int
    mode: int


def _require_positive(spectrum: KineticSpectrum) -> None:
    if np.any(spectrum.eigenvalues <= 0):
        raise NonPositiveSpectrumError(f"Kinetic spectrum has non-positive eigenvalue {float(np.min(spectrum.eigenvalues)):.3e}")


def _branch_order(n: int) -> List[tuple]:
    # ascending energy: negative branch from the largest mode down, then positive branch up
    return [(-1, j) for j in reversed(range(n))] + [(1, j) for j in range(n)]


def _pair(spectrum: KineticSpectrum, sign: int, mode: int) -> FVEigenpair:
    root = float(np.sqrt(spectrum.eigenvalues[mode]))
    psi = spectrum.eigenvectors[:, mode]
    return FVEigenpair(
        energy=sign * root,
        vector=TwoComponentState(upper=sign * root * psi, lower=psi),
        adjoint_vector=TwoComponentState(upper=psi, lower=sign * root * psi),
        sign=sign,
        mode=mode,
    )


def fv_eigenpairs(spectrum: KineticSpectrum) -> List[FVEigenpair]:
    _require_positive(spectrum)
    return [_pair(spectrum, sign, mode) for sign, mode in _branch_order(spectrum.n)]


def adjoint_eigenvectors(spectrum: KineticSpectrum) -> List[TwoComponentState]:
    return [pair.adjoint_vector for pair in fv_eigenpairs(spectrum)]


def eigenstate(spectrum: KineticSpectrum, mode: int, branch: int) -> TwoComponentState:
    """Ψ_mode^(branch) for a 1-based mode index and branch ±1."""
    _require_positive(spectrum)
    if not 1 <= mode <= spectrum.n:
        raise ConfigurationError(f"Mode index must be in [1, {spectrum.n}], got {mode}")
    if branch not in (1, -1):
        raise ConfigurationError(f"Branch must be +1 or -1, got {branch}")
    return _pair(spectrum, branch, mode - 1).vector


def _columns(pairs: Sequence[FVEigenpair]):
    psi = np.column_stack([p.vector.vector for p in pairs])
    phi = np.column_stack([p.adjoint_vector.vector for p in pairs])
    norms = 2.0 * np.array([p.energy for p in pairs])
    return psi, phi, norms


def biorthogonality_check(pairs: Sequence[FVEigenpair]) -> float:
    """Largest deviation of ⟨Φ_m|Ψ_n⟩ from δ_mn · 2E_n."""
    psi, phi, norms = _columns(pairs)
    gram = phi.conj().T @ psi
    return max_norm(gram - np.diag(norms))


def completeness_residual(pairs: Sequence[FVEigenpair]) -> float:
    psi, phi, norms = _columns(pairs)
    resolution = (psi / norms) @ phi.conj().T
    return max_norm(resolution - np.eye(psi.shape[0]))


def expand_in_eigenbasis(state: TwoComponentState, pairs: Sequence[FVEigenpair]) -> np.ndarray:
    """Coefficients c_k = ⟨Φ_k|Ψ⟩ / (2E_k), so that Ψ = Σ c_k Ψ_k."""
    if 2 * state.n != len(pairs):
        raise DimensionMismatchError(f"State of dimension {2 * state.n} cannot be expanded in {len(pairs)} eigenpairs")
    _, phi, norms = _columns(pairs)
    return (phi.conj().T @ state.vector) / norms
