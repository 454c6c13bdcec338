from typing import Any, Dict

import numpy as np
import scipy.linalg

from ..config.run_config import RunConfig
from ..errors import IllConditionedError
from ..logging import get_logger
from ..metric.hermitize import hermitize, hermiticity_residual, omega_condition_number
from ..metric.inner_product import metric_norm
from ..metric.operator import (
    dieudonne_residual,
    hamiltonian_in_basis,
    metric_in_site_basis,
    solve_dieudonne,
    theta_condition_number,
)
from ..metric.positivity import check_positivity, negative_norm_witness
from ..results.report import RunReport
from .base import Command

logger = get_logger(__name__)

DIEUDONNE_TOLERANCE = 1e-12
HERMITICITY_TOLERANCE = 1e-9


class MetricCheckCommand(Command):
    """Positivity verdicts, Dieudonné residuals and the hermitized Hamiltonian for the configured metric.

    Exit code 4 when the metric is not positive or a residual exceeds its tolerance; the report is
    written either way.
    """

    name = "metric-check"

    def execute(self, config: RunConfig, report: RunReport) -> None:
        spectrum = self.spectrum(config)
        params = config.metric.resolve(spectrum.n)

        positivity = check_positivity(params, spectrum)
        metric = solve_dieudonne(spectrum, params)
        residual = dieudonne_residual(hamiltonian_in_basis(spectrum, metric.basis), metric.theta)
        site_metric = metric_in_site_basis(metric, spectrum)
        site_residual = dieudonne_residual(hamiltonian_in_basis(spectrum, site_metric.basis), site_metric.theta)

        document: Dict[str, Any] = {
            "n": spectrum.n,
            "mode": params.mode.value,
            "positive": positivity.positive,
            **positivity.to_dict(),
            "dieudonne_residual": residual,
            "dieudonne_residual_site": site_residual,
            "theta_condition_number": theta_condition_number(metric),
            "hermiticity_residual": None,
            "hermitian_spectrum_deviation": None,
            "omega_condition_number": None,
            "negative_norm": None,
        }

        hermitian_ok = False
        if metric.positive:
            document["omega_condition_number"] = omega_condition_number(metric)
            try:
                h = hermitize(np.diag(spectrum.eigenvalues), metric)
            except IllConditionedError as e:
                logger.warning(f"Metric: {e}")
            else:
                energies = spectrum.energies()
                expected = np.sort(np.concatenate([-energies, energies]))
                found = scipy.linalg.eigvalsh(0.5 * (h + h.T))
                document["hermiticity_residual"] = hermiticity_residual(h)
                document["hermitian_spectrum_deviation"] = float(np.max(np.abs(found - expected)))
                hermitian_ok = document["hermiticity_residual"] <= HERMITICITY_TOLERANCE
        else:
            witness = negative_norm_witness(metric)
            if witness is not None:
                document["negative_norm"] = metric_norm(metric, witness)

        passed = positivity.positive and residual <= DIEUDONNE_TOLERANCE and hermitian_ok
        document["passed"] = passed
        report.add_document("metric_report", document)
        report.exit_code = 0 if passed else 4

        logger.info(f"Metric: positive={positivity.positive} residual={residual:.3e} passed={passed}")
        report.add_summary("positive", positivity.positive)
        report.add_summary("dieudonne residual", residual)
        report.add_summary("theta condition number", document["theta_condition_number"])
        if document["hermiticity_residual"] is not None:
            report.add_summary("hermiticity residual", document["hermiticity_residual"])
