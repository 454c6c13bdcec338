from typing import Optional

import numpy as np

from ..config.run_config import RunConfig
from ..errors import ConfigurationError
from ..lattice.convergence import convergence_study
from ..lattice.spectrum import KineticSpectrum
from ..metric.operator import solve_dieudonne, theta_condition_number
from ..metric.params import MetricMode
from ..results.report import RunReport
from .base import Command


class ConvergeCommand(Command):
    name = "converge"

    def __init__(self, show_progress: bool = False, max_workers: Optional[int] = None):
        self.show_progress = show_progress
        self.max_workers = max_workers

    def execute(self, config: RunConfig, report: RunReport) -> None:
        settings = config.convergence
        metric = config.metric
        if metric.mode is MetricMode.PER_MODE and any(np.size(v) > 1 for v in (metric.alphas, metric.betas)):
            raise ConfigurationError("Convergence runs use several grid sizes; per-mode metric parameters must be scalars")

        def theta_condition(spectrum: KineticSpectrum) -> float:
            return theta_condition_number(solve_dieudonne(spectrum, metric.resolve(spectrum.n)))

        study = convergence_study(
            settings.length,
            config.lattice.m,
            settings.levels,
            modes=settings.modes,
            theta_condition=theta_condition,
            max_workers=self.max_workers,
            show_progress=self.show_progress,
        )
        report.add_table("convergence", study.to_frame())
        report.add_summary("levels", len(settings.levels))
        report.add_summary("fitted order", study.fitted_order)
