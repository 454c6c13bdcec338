"""Discretized kinetic operator K = -Δ + m² and its spectrum"""

from .config import BoundaryCondition, LatticeConfig
from .operators import build_laplacian, build_kinetic, grid_coordinates
from .spectrum import (
    KineticSpectrum,
    eigendecompose,
    kinetic_spectrum,
    dirichlet_eigenvalue_exact,
    periodic_eigenvalue_exact,
    continuum_dispersion,
)
from .convergence import ConvergenceLevel, ConvergenceReport, convergence_study, continuum_targets, fit_order

__all__ = [
    "BoundaryCondition",
    "LatticeConfig",
    "build_laplacian",
    "build_kinetic",
    "grid_coordinates",
    "KineticSpectrum",
    "eigendecompose",
    "kinetic_spectrum",
    "dirichlet_eigenvalue_exact",
    "periodic_eigenvalue_exact",
    "continuum_dispersion",
    "ConvergenceLevel",
    "ConvergenceReport",
    "convergence_study",
    "continuum_targets",
    "fit_order",
]
