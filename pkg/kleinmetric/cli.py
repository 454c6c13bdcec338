"""Command-line front end: `kleinmetric {spectrum,metric-check,evolve,converge}`."""

from typing import Any, Dict, List, Optional
import argparse
import sys

from .commands import COMMANDS, ConvergeCommand
from .config.run_config import OUTPUT_FORMATS, RunConfig
from .errors import KleinMetricError
from .exporters.files import FileExporter
from .exporters.terminal import TerminalExporter
from .logging import get_logger, set_level

logger = get_logger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as a single `kleinmetric <command>: ...` line with exit status 2."""

    def error(self, message: str):
        self.exit(2, f"{self.prog}: {message}\n")


def _common_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="YAML, JSON or TOML run configuration")
    common.add_argument("--n", type=int, help="Number of grid points")
    common.add_argument("--h", type=float, help="Grid spacing")
    common.add_argument("--mass", type=float, help="Particle mass m")
    common.add_argument("--bc", choices=["dirichlet", "periodic"], help="Boundary condition")
    common.add_argument("--alpha", help="Metric alpha: scalar or comma-separated per-mode list")
    common.add_argument("--beta", help="Metric beta: scalar or comma-separated per-mode list")
    common.add_argument("--mode", choices=["per_mode", "continuous"], help="Metric parametrization")
    common.add_argument("--out", help="Output directory (overrides KLEINMETRIC_OUT)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Table format")
    common.add_argument("--log-level", choices=LOG_LEVELS, default="INFO", type=str.upper)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = _Parser(prog="kleinmetric", description="Positive metrics for the discretized Klein-Gordon equation")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("spectrum", parents=[common], help="Kinetic eigenvalues and Feshbach-Villars energies")
    sub.add_parser("metric-check", parents=[common], help="Positivity, Dieudonné residual and hermitization of a metric")

    evolve = sub.add_parser("evolve", parents=[common], help="Θ-norm and naive-norm history of an evolved state")
    evolve.add_argument("--t-max", type=float, help="Final time")
    evolve.add_argument("--steps", type=int, help="Number of time steps")
    evolve.add_argument("--initial", choices=["packet", "eigenstate", "mixed"], help="Initial state kind")
    evolve.add_argument("--x0", type=float, help="Packet centre")
    evolve.add_argument("--sigma", type=float, help="Packet width")
    evolve.add_argument("--k0", type=float, help="Packet momentum")
    evolve.add_argument("--state-mode", type=int, help="Mode index (1-based) of an eigenstate or mixed state")
    evolve.add_argument("--branch", type=int, choices=[1, -1], help="Energy branch of an eigenstate")

    converge = sub.add_parser("converge", parents=[common], help="Continuum-limit convergence study")
    converge.add_argument("--levels", help="Comma-separated grid sizes, e.g. 9,19,39,79")
    converge.add_argument("--length", type=float, help="Box length L")
    converge.add_argument("--modes", type=int, help="Number of tracked eigenvalues")
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Dict[str, Any]]:
    """Nested config overrides for every flag that was given."""
    mapping = {
        "n": ("lattice", "n"),
        "h": ("lattice", "h"),
        "mass": ("lattice", "mass"),
        "bc": ("lattice", "bc"),
        "alpha": ("metric", "alphas"),
        "beta": ("metric", "betas"),
        "mode": ("metric", "mode"),
        "out": ("output", "directory"),
        "format": ("output", "format"),
        "t_max": ("evolution", "t_max"),
        "steps": ("evolution", "steps"),
        "levels": ("convergence", "levels"),
        "length": ("convergence", "length"),
        "modes": ("convergence", "modes"),
    }
    initial = {
        "initial": "kind",
        "x0": "x0",
        "sigma": "sigma",
        "k0": "k0",
        "state_mode": "mode",
        "branch": "branch",
    }

    overrides: Dict[str, Dict[str, Any]] = {}
    for attr, (section, key) in mapping.items():
        value = getattr(args, attr, None)
        if value is not None:
            overrides.setdefault(section, {})[key] = value
    for attr, key in initial.items():
        value = getattr(args, attr, None)
        if value is not None:
            overrides.setdefault("evolution", {}).setdefault("initial", {})[key] = value
    return overrides


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_level(args.log_level)

    try:
        config = RunConfig.load(args.config, overrides=overrides_from_args(args))
        logger.debug(f"CLI: resolved configuration {config.to_dict()}")
        if args.command == ConvergeCommand.name:
            command = ConvergeCommand(show_progress=True)
        else:
            command = COMMANDS[args.command]()
        exporters = [FileExporter(config.output.directory, config.output.format), TerminalExporter()]
        report = command.run(config, exporters)
    except KleinMetricError as e:
        print(f"kleinmetric {args.command}: {e}", file=sys.stderr)
        return e.exit_code
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
