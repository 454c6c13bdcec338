import numpy as np

from ..arrays import require_square
from ..errors import DimensionMismatchError
from .state import TwoComponentState


def build_hamiltonian(kinetic: np.ndarray) -> np.ndarray:
    """Block Hamiltonian H = [[0, K], [I, 0]] of i∂_tΨ = HΨ."""
    kinetic = require_square(np.asarray(kinetic, dtype=np.float64), "K")
    n = kinetic.shape[0]
    zero = np.zeros((n, n))
    return np.block([[zero, kinetic], [np.eye(n), zero]])


def apply_hamiltonian(kinetic: np.ndarray, state: TwoComponentState) -> TwoComponentState:
    kinetic = require_square(kinetic, "K")
    if kinetic.shape[0] != state.n:
        raise DimensionMismatchError(f"K has dimension {kinetic.shape[0]} but state has {state.n}")
    return TwoComponentState(upper=kinetic @ state.lower, lower=state.upper.copy())
