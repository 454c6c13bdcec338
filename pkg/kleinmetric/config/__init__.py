"""Run configuration for the command-line front end"""

from .result import ValidationResult
from .run_config import (
    RunConfig,
    MetricSpec,
    InitialSpec,
    EvolutionSpec,
    ConvergenceSpec,
    OutputSpec,
    OUTPUT_ENV_VAR,
)

__all__ = [
    "ValidationResult",
    "RunConfig",
    "MetricSpec",
    "InitialSpec",
    "EvolutionSpec",
    "ConvergenceSpec",
    "OutputSpec",
    "OUTPUT_ENV_VAR",
]
