"""Metric operators solving the Dieudonné equation HᵀΘ = ΘH"""

from .params import MetricMode, MetricParams
from .operator import (
    MetricBasis,
    MetricOperator,
    solve_dieudonne,
    metric_in_site_basis,
    metric_in_kinetic_basis,
    hamiltonian_in_basis,
    dieudonne_residual,
    metric_from_branch_weights,
    charge_metric,
    theta_condition_number,
    is_positive_definite,
)
from .positivity import Verdict, ModeVerdict, PositivityReport, check_positivity, negative_norm_witness
from .inner_product import inner_product, metric_norm, inner_product_explicit, inner_product_wavefunction_form
from .hermitize import factorize_omega, hermitize, hermiticity_residual, omega_condition_number

__all__ = [
    "MetricMode",
    "MetricParams",
    "MetricBasis",
    "MetricOperator",
    "solve_dieudonne",
    "metric_in_site_basis",
    "metric_in_kinetic_basis",
    "hamiltonian_in_basis",
    "dieudonne_residual",
    "metric_from_branch_weights",
    "charge_metric",
    "theta_condition_number",
    "is_positive_definite",
    "Verdict",
    "ModeVerdict",
    "PositivityReport",
    "check_positivity",
    "negative_norm_witness",
    "inner_product",
    "metric_norm",
    "inner_product_explicit",
    "inner_product_wavefunction_form",
    "factorize_omega",
    "hermitize",
    "hermiticity_residual",
    "omega_condition_number",
]
