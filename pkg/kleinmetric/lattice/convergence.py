from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence
import math
import os

import numpy as np
import pandas as pd
from rich.progress import Progress

from ..errors import ConfigurationError
from ..logging import get_logger
from .config import BoundaryCondition, LatticeConfig
from .spectrum import KineticSpectrum, kinetic_spectrum

logger = get_logger(__name__)


@dataclass(frozen=True)
class ConvergenceLevel:
    n: int
    h: float
    eigenvalues: np.ndarray
    targets: np.ndarray
    errors: np.ndarray
    theta_condition_number: float = float("nan")


@dataclass(frozen=True)
class ConvergenceReport:
    length: float
    mass: float
    levels: List[ConvergenceLevel]
    fitted_order: float
    local_orders: List[float] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for level in self.levels:
            row: Dict[str, float] = {"n": level.n, "h": level.h}
            for j, error in enumerate(level.errors, start=1):
                row[f"eigenvalue_error_{j}"] = float(error)
            row["fitted_order"] = self.fitted_order
            row["theta_condition_number"] = level.theta_condition_number
            rows.append(row)
        return pd.DataFrame(rows)


def continuum_targets(length: float, m: float, modes: int) -> np.ndarray:
    j = np.arange(1, modes + 1, dtype=np.float64)
    return (j * math.pi / length) ** 2 + m * m


def fit_order(hs: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log(error) against log(h)."""
    hs = np.asarray(hs, dtype=np.float64)
    errors = np.asarray(errors, dtype=np.float64)
    mask = errors > 0
    if mask.sum() < 2:
        return float("nan")
    slope, _ = np.polyfit(np.log(hs[mask]), np.log(errors[mask]), 1)
    return float(slope)


def _run_level(
    n: int,
    length: float,
    m: float,
    modes: int,
    theta_condition: Optional[Callable[[KineticSpectrum], float]],
) -> ConvergenceLevel:
    cfg = LatticeConfig(n=n, h=length / (n + 1), m=m, bc=BoundaryCondition.DIRICHLET)
    spectrum = kinetic_spectrum(cfg)
    eigenvalues = np.array(spectrum.eigenvalues[:modes])
    targets = continuum_targets(length, m, modes)
    condition = theta_condition(spectrum) if theta_condition is not None else float("nan")
    return ConvergenceLevel(
        n=n,
        h=cfg.h,
        eigenvalues=eigenvalues,
        targets=targets,
        errors=np.abs(eigenvalues - targets),
        theta_condition_number=float(condition),
    )


def convergence_study(
    length: float,
    m: float,
    levels: Sequence[int],
    modes: int = 3,
    theta_condition: Optional[Callable[[KineticSpectrum], float]] = None,
    max_workers: Optional[int] = None,
    show_progress: bool = False,
) -> ConvergenceReport:
    """Compare the lowest Dirichlet eigenvalues of K with the continuum box values (jπ/L)² + m².

    Every level uses h = L / (n + 1). Levels run concurrently and are collected back in
    ascending n, so the report does not depend on completion order.

    Args:
        length: Box length L.
        m: Mass.
        levels: Strictly increasing grid sizes.
        modes: Number of lowest eigenvalues to track.
        theta_condition: Optional callable returning the metric condition number for a spectrum.
        max_workers: Thread count, defaults to the CPU count.
        show_progress: Render a rich progress bar.
    """
    levels = [int(n) for n in levels]
    if not levels:
        raise ConfigurationError("At least one convergence level is required")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ConfigurationError(f"Convergence levels must be strictly increasing, got {levels}")
    if not length > 0:
        raise ConfigurationError(f"Box length must be positive, got {length}")
    if modes < 1 or modes > levels[0]:
        raise ConfigurationError(f"modes must be in [1, {levels[0]}] for the smallest level, got {modes}")

    n_jobs = max_workers or os.cpu_count() or 1
    results: Dict[int, ConvergenceLevel] = {}

    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        futures = {pool.submit(_run_level, n, length, m, modes, theta_condition): n for n in levels}
        with Progress(disable=not show_progress, transient=True) as progress:
            task_id = progress.add_task("[cyan]Convergence", total=len(levels))
            for future in as_completed(futures):
                results[futures[future]] = future.result()
                progress.advance(task_id)

    ordered = [results[n] for n in levels]
    hs = [level.h for level in ordered]
    first_errors = [level.errors[0] for level in ordered]
    local_orders = [
        math.log(e0 / e1) / math.log(h0 / h1) if e0 > 0 and e1 > 0 else float("nan")
        for h0, h1, e0, e1 in zip(hs, hs[1:], first_errors, first_errors[1:])
    ]
    report = ConvergenceReport(
        length=length,
        mass=m,
        levels=ordered,
        fitted_order=fit_order(hs, first_errors),
        local_orders=local_orders,
    )
    logger.info(f"Convergence: {len(levels)} levels, fitted order {report.fitted_order:.3f}")
    return report
