from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..errors import NotPositiveError
from ..logging import get_logger
from ..metric.inner_product import metric_norm
from ..metric.operator import MetricBasis, MetricOperator
from .evolve import EvolutionPlan, evolve

logger = get_logger(__name__)


@dataclass(frozen=True)
class NormHistory:
    times: np.ndarray
    theta_norm: np.ndarray
    naive_norm: np.ndarray

    @property
    def max_relative_drift(self) -> float:
        """Largest relative deviation of the Θ-norm from its initial value."""
        reference = abs(self.theta_norm[0])
        drift = float(np.max(np.abs(self.theta_norm - self.theta_norm[0])))
        return drift / reference if reference else drift

    @property
    def naive_variation(self) -> float:
        """max/min - 1 of the naive norm."""
        smallest = float(np.min(self.naive_norm))
        if smallest <= 0:
            return float("inf")
        return float(np.max(self.naive_norm)) / smallest - 1.0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.times, "theta_norm": self.theta_norm, "naive_norm": self.naive_norm})


def norm_history(plan: EvolutionPlan, metric: MetricOperator) -> NormHistory:
    """Θ-norm and naive Euclidean norm of Ψ(t) along the plan.

    The Θ-norm is conserved because the propagator is a Θ-isometry; the naive norm of the
    false Hilbert space is not, unless the state stays on one branch of every mode.
    """
    if not metric.positive:
        raise NotPositiveError("Norm history requires a positive definite metric")

    states = evolve(plan)
    rotation = np.asarray(plan.spectrum.eigenvectors).T if metric.basis is MetricBasis.KINETIC_EIGENBASIS else None

    theta_norm = []
    naive_norm = []
    for state in states:
        coords = state.rotated(rotation) if rotation is not None else state
        theta_norm.append(metric_norm(metric, coords))
        naive_norm.append(float(np.vdot(state.vector, state.vector).real))

    history = NormHistory(times=np.array(plan.times), theta_norm=np.array(theta_norm), naive_norm=np.array(naive_norm))
    logger.info(f"Evolution: Θ-norm drift {history.max_relative_drift:.2e}, naive-norm variation {history.naive_variation:.2e}")
    return history
