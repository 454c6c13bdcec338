"""Time evolution under exp(-iHt) and norm diagnostics"""

from .propagator import mode_propagator, evolution_operator, sin_over_energy
from .evolve import EvolutionPlan, evolve, evolve_states
from .norms import NormHistory, norm_history
from .packets import gaussian_packet, mixed_branch_state, normalize, default_metric

__all__ = [
    "mode_propagator",
    "evolution_operator",
    "sin_over_energy",
    "EvolutionPlan",
    "evolve",
    "evolve_states",
    "NormHistory",
    "norm_history",
    "gaussian_packet",
    "mixed_branch_state",
    "normalize",
    "default_metric",
]
