from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
import scipy.linalg

from ..feshbach_villars.state import TwoComponentState
from ..lattice.spectrum import KineticSpectrum
from ..logging import get_logger
from .operator import MetricOperator, is_positive_definite, solve_dieudonne
from .params import MetricParams

logger = get_logger(__name__)


class Verdict(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INDETERMINATE = "indeterminate"


@dataclass
class ModeVerdict:
    mode_index: int
    kinetic_eigenvalue: float
    alpha: float
    beta: float
    margin: float
    verdict: Verdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode_index": self.mode_index,
            "kinetic_eigenvalue": self.kinetic_eigenvalue,
            "alpha": self.alpha,
            "beta": self.beta,
            "margin": self.margin,
            "verdict": self.verdict.value,
        }


@dataclass
class PositivityReport:
    modes: List[ModeVerdict] = field(default_factory=list)
    numerical_positive: bool = False
    min_eigenvalue: float = float("nan")

    @property
    def analytic_positive(self) -> Optional[bool]:
        verdicts = {m.verdict for m in self.modes}
        if Verdict.NEGATIVE in verdicts:
            return False
        if Verdict.INDETERMINATE in verdicts:
            return None
        return True

    @property
    def agree(self) -> bool:
        analytic = self.analytic_positive
        return analytic is None or analytic == self.numerical_positive

    @property
    def positive(self) -> bool:
        return self.analytic_positive is True and self.numerical_positive

    def __bool__(self) -> bool:
        return self.positive

    def __str__(self) -> str:
        status = {True: "POSITIVE", False: "NOT POSITIVE", None: "INDETERMINATE"}[self.analytic_positive]
        parts = [f"PositivityReport: {status} (numerical: {self.numerical_positive}, min eigenvalue {self.min_eigenvalue:.3e})"]
        for m in self.modes:
            if m.verdict is not Verdict.POSITIVE:
                parts.append(f"  - mode {m.mode_index}: {m.verdict.value} (margin {m.margin:.3e})")
        return "\n".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "analytic_positive": self.analytic_positive,
            "numerical_positive": self.numerical_positive,
            "agree": self.agree,
            "min_eigenvalue": self.min_eigenvalue,
            "modes": [m.to_dict() for m in self.modes],
        }


def check_positivity(params: MetricParams, spectrum: KineticSpectrum) -> PositivityReport:
    """Analytic predicate α_i > 0, a_iα_i² > β_i² checked mode by mode, plus a Cholesky verdict on Θ.

    A mode with α_i ≤ 0 is negative outright. Otherwise modes whose margin lies within
    1e-10·max(1, a_iα_i²) of zero are marked indeterminate and
    excluded from the comparison between the two verdicts.
    """
    alphas, betas = params.mode_blocks(spectrum)
    margins, bands = params.positivity_margins(spectrum)

    modes = []
    for i in range(spectrum.n):
        if alphas[i] <= 0:
            verdict = Verdict.NEGATIVE
        elif abs(margins[i]) <= bands[i]:
            verdict = Verdict.INDETERMINATE
        elif margins[i] < 0:
            verdict = Verdict.NEGATIVE
        else:
            verdict = Verdict.POSITIVE
        modes.append(
            ModeVerdict(
                mode_index=i + 1,
                kinetic_eigenvalue=float(spectrum.eigenvalues[i]),
                alpha=float(alphas[i]),
                beta=float(betas[i]),
                margin=float(margins[i]),
                verdict=verdict,
            )
        )

    theta = solve_dieudonne(spectrum, params).theta
    report = PositivityReport(
        modes=modes,
        numerical_positive=is_positive_definite(theta),
        min_eigenvalue=float(scipy.linalg.eigvalsh(theta)[0]),
    )
    if not report.agree:
        logger.warning(f"Metric: analytic and numerical positivity disagree (min eigenvalue {report.min_eigenvalue:.3e})")
    return report


def negative_norm_witness(metric: MetricOperator) -> Optional[TwoComponentState]:
    """State with ⟨⟨x|x⟩ < 0 taken from the most negative eigenvector of Θ, or None if there is none."""
    eigvals, eigvecs = scipy.linalg.eigh(metric.theta)
    if eigvals[0] >= 0:
        return None
    return TwoComponentState.from_vector(eigvecs[:, 0])
