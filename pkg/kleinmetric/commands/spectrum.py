import numpy as np
import pandas as pd

from ..config.run_config import RunConfig
from ..results.report import RunReport
from .base import Command


class SpectrumCommand(Command):
    name = "spectrum"

    def execute(self, config: RunConfig, report: RunReport) -> None:
        spectrum = self.spectrum(config)
        energies = spectrum.energies()
        frame = pd.DataFrame(
            {
                "mode_index": np.arange(1, spectrum.n + 1),
                "kinetic_eigenvalue": np.asarray(spectrum.eigenvalues),
                "energy_plus": energies,
                "energy_minus": -energies,
            }
        )
        report.add_table("spectrum", frame)
        report.add_summary("modes", spectrum.n)
        report.add_summary("lowest energy", float(energies[0]))
        report.add_summary("highest energy", float(energies[-1]))
        report.add_summary("eigen residual", spectrum.residual())
