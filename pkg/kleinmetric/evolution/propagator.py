import numpy as np
import scipy.linalg

from ..errors import NonPositiveSpectrumError
from ..lattice.spectrum import KineticSpectrum

SERIES_THRESHOLD = 1e-4


def sin_over_energy(energy: np.ndarray, t: float) -> np.ndarray:
    """sin(Et)/E, switching to the Taylor series in (Et) where |Et| is small."""
    energy = np.asarray(energy, dtype=np.float64)
    phase = energy * t
    small = np.abs(phase) < SERIES_THRESHOLD
    safe = np.where(small, 1.0, energy)
    exact = np.sin(phase) / safe
    p2 = phase * phase
    series = t * (1.0 - p2 / 6.0 + p2 * p2 / 120.0)
    return np.where(small, series, exact)


def mode_factors(eigenvalues: np.ndarray, t: float):
    energy = np.sqrt(eigenvalues)
    s = sin_over_energy(energy, t)
    return np.cos(energy * t), energy * energy * s, s


def mode_propagator(a: float, t: float) -> np.ndarray:
    """exp(-itM) for the mode block M = [[0, a], [1, 0]].

    M² = a·I gives exp(-itM) = cos(Et)·I - i·sin(Et)/E·M with E = √a.
    """
    if not a > 0:
        raise NonPositiveSpectrumError(f"Mode eigenvalue must be positive, got {a}")
    cos, e_sin, sin_e = (float(x) for x in mode_factors(np.array([a], dtype=np.float64), t))
    return np.array([[cos, -1j * e_sin], [-1j * sin_e, cos]], dtype=np.complex128)


def evolution_operator(spectrum: KineticSpectrum, t: float) -> np.ndarray:
    """Dense U(t) = exp(-iHt) assembled from the mode propagators in the site basis."""
    cos, e_sin, sin_e = mode_factors(np.asarray(spectrum.eigenvalues), t)
    v = np.asarray(spectrum.eigenvectors)
    blocks = np.block(
        [
            [np.diag(cos), np.diag(-1j * e_sin)],
            [np.diag(-1j * sin_e), np.diag(cos)],
        ]
    )
    rotation = scipy.linalg.block_diag(v, v)
    return rotation @ blocks @ rotation.T
