from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from ..arrays import readonly
from ..errors import ConfigurationError, DimensionMismatchError
from ..feshbach_villars.state import TwoComponentState
from ..lattice.spectrum import KineticSpectrum
from ..logging import get_logger
from .propagator import mode_factors

logger = get_logger(__name__)


@dataclass(frozen=True)
class EvolutionPlan:
    """Sampling times (natural units, c = ħ = 1), the kinetic spectrum and the initial state."""

    times: np.ndarray
    spectrum: KineticSpectrum
    initial: TwoComponentState

    def __post_init__(self):
        times = np.atleast_1d(np.asarray(self.times, dtype=np.float64))
        if times.ndim != 1 or times.size == 0:
            raise ConfigurationError("Evolution plan needs at least one time point")
        if not np.all(np.isfinite(times)):
            raise ConfigurationError("Evolution times must be finite")
        if np.any(np.diff(times) <= 0):
            raise ConfigurationError("Evolution times must be strictly increasing")
        if self.initial.n != self.spectrum.n:
            raise DimensionMismatchError(f"Initial state dimension {self.initial.n} does not match spectrum dimension {self.spectrum.n}")
        object.__setattr__(self, "times", readonly(times))

    @classmethod
    def uniform(cls, spectrum: KineticSpectrum, initial: TwoComponentState, t_max: float, steps: int) -> "EvolutionPlan":
        if t_max < 0:
            raise ConfigurationError(f"t_max must be non-negative, got {t_max}")
        if t_max == 0:
            return cls(times=[0.0], spectrum=spectrum, initial=initial)
        if steps < 1:
            raise ConfigurationError(f"steps must be at least 1, got {steps}")
        return cls(times=np.linspace(0.0, t_max, steps + 1), spectrum=spectrum, initial=initial)


def evolve(plan: EvolutionPlan) -> List[TwoComponentState]:
    """Ψ(t) = exp(-iHt)Ψ(0) at every plan time, propagated exactly mode by mode.

    The state is rotated into the kinetic eigenbasis, each mode pair (u_j, l_j) is multiplied
    by its 2×2 propagator and the result is rotated back. t = 0 returns the initial state as is.
    """
    v = np.asarray(plan.spectrum.eigenvectors)
    eigenvalues = np.asarray(plan.spectrum.eigenvalues)
    u0 = v.T @ plan.initial.upper
    l0 = v.T @ plan.initial.lower

    states = []
    for t in plan.times:
        if t == 0:
            states.append(plan.initial)
            continue
        cos, e_sin, sin_e = mode_factors(eigenvalues, float(t))
        upper = cos * u0 - 1j * e_sin * l0
        lower = -1j * sin_e * u0 + cos * l0
        states.append(TwoComponentState(upper=v @ upper, lower=v @ lower))

    logger.debug(f"Evolution: propagated n={plan.spectrum.n} over {len(plan.times)} time points")
    return states


def evolve_states(spectrum: KineticSpectrum, initial: TwoComponentState, times: Sequence[float]) -> List[TwoComponentState]:
    return evolve(EvolutionPlan(times=times, spectrum=spectrum, initial=initial))
