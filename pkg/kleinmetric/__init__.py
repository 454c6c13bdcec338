"""kleinmetric

Positive definite metrics for the discretized Klein-Gordon equation in Feshbach-Villars form:
spectra, the Dieudonné family of metric operators, hermitization and metric-norm conserving
time evolution.
"""

import multiprocessing
import sys

import numpy as np
import scipy
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from kleinmetric.lattice import LatticeConfig, BoundaryCondition, kinetic_spectrum
from kleinmetric.feshbach_villars import TwoComponentState, fv_eigenpairs
from kleinmetric.metric import MetricParams, solve_dieudonne, check_positivity, hermitize
from kleinmetric.evolution import EvolutionPlan, evolve, norm_history
from kleinmetric.config import RunConfig

__version__ = "0.1.0"


def verify():
    console = Console()
    table = Table(show_header=False)

    table.add_row("Python Version", sys.version)
    table.add_row("NumPy Version", np.__version__)
    table.add_row("SciPy Version", scipy.__version__)
    table.add_row("Available CPU Cores", str(multiprocessing.cpu_count()))
    table.add_row("kleinmetric Version", __version__)
    table.add_row("Platform", sys.platform)

    console.print()
    console.print(Panel(table, title="[bold]kleinmetric[/bold]", border_style="blue"))
    console.print()


__all__ = [
    "verify",
    "LatticeConfig",
    "BoundaryCondition",
    "kinetic_spectrum",
    "TwoComponentState",
    "fv_eigenpairs",
    "MetricParams",
    "solve_dieudonne",
    "check_positivity",
    "hermitize",
    "EvolutionPlan",
    "evolve",
    "norm_history",
    "RunConfig",
    "__version__",
]
