from ..config.run_config import RunConfig
from ..errors import NotPositiveError
from ..evolution.evolve import EvolutionPlan, evolve_states
from ..evolution.norms import norm_history
from ..evolution.packets import gaussian_packet, mixed_branch_state, normalize
from ..feshbach_villars.eigenpairs import eigenstate
from ..feshbach_villars.state import TwoComponentState
from ..lattice.spectrum import KineticSpectrum
from ..metric.operator import MetricOperator, metric_in_site_basis, solve_dieudonne
from ..results.report import RunReport
from .base import Command


def initial_state(config: RunConfig, spectrum: KineticSpectrum, site_metric: MetricOperator) -> TwoComponentState:
    """Site-basis initial state described by `config.evolution.initial`, at unit Θ-norm."""
    initial = config.evolution.initial
    if initial.kind == "eigenstate":
        return normalize(eigenstate(spectrum, initial.mode, initial.branch), site_metric, spectrum)
    if initial.kind == "mixed":
        return mixed_branch_state(spectrum, initial.mode, initial.weights, metric=site_metric)
    x0 = initial.x0 if initial.x0 is not None else config.lattice.length / 2
    return gaussian_packet(config.lattice, x0, initial.sigma, initial.k0, metric=site_metric, spectrum=spectrum)


class EvolveCommand(Command):
    name = "evolve"

    def execute(self, config: RunConfig, report: RunReport) -> None:
        spectrum = self.spectrum(config)
        metric = solve_dieudonne(spectrum, config.metric.resolve(spectrum.n))
        if not metric.positive:
            raise NotPositiveError("Evolution diagnostics require a positive definite metric; run metric-check for details")

        initial = initial_state(config, spectrum, metric_in_site_basis(metric, spectrum))
        plan = EvolutionPlan.uniform(spectrum, initial, config.evolution.t_max, config.evolution.steps)
        history = norm_history(plan, metric)
        final = evolve_states(spectrum, initial, [plan.times[-1]])[-1]

        report.add_table("norms", history.to_frame())
        report.add_document(
            "final_state",
            {
                "t": float(plan.times[-1]),
                **final.to_dict(),
                "theta_norm": float(history.theta_norm[-1]),
                "naive_norm": float(history.naive_norm[-1]),
            },
        )
        report.add_summary("samples", len(plan.times))
        report.add_summary("theta-norm drift", history.max_relative_drift)
        report.add_summary("naive-norm variation", history.naive_variation)
