"""CLI subcommands. Each `cmd_*` runs one command against a validated RunConfig and writes its files."""

from typing import Dict, List, Optional, Type

from ..config.run_config import RunConfig
from ..exporters.base import Exporter
from ..results.report import RunReport
from .base import Command
from .converge import ConvergeCommand
from .evolve import EvolveCommand, initial_state
from .metric_check import MetricCheckCommand
from .spectrum import SpectrumCommand

COMMANDS: Dict[str, Type[Command]] = {
    SpectrumCommand.name: SpectrumCommand,
    MetricCheckCommand.name: MetricCheckCommand,
    EvolveCommand.name: EvolveCommand,
    ConvergeCommand.name: ConvergeCommand,
}


def cmd_spectrum(config: RunConfig, exporters: Optional[List[Exporter]] = None) -> RunReport:
    return SpectrumCommand().run(config, exporters)


def cmd_metric_check(config: RunConfig, exporters: Optional[List[Exporter]] = None) -> RunReport:
    return MetricCheckCommand().run(config, exporters)


def cmd_evolve(config: RunConfig, exporters: Optional[List[Exporter]] = None) -> RunReport:
    return EvolveCommand().run(config, exporters)


def cmd_converge(config: RunConfig, exporters: Optional[List[Exporter]] = None, show_progress: bool = False) -> RunReport:
    return ConvergeCommand(show_progress=show_progress).run(config, exporters)


__all__ = [
    "COMMANDS",
    "Command",
    "SpectrumCommand",
    "MetricCheckCommand",
    "EvolveCommand",
    "ConvergeCommand",
    "initial_state",
    "cmd_spectrum",
    "cmd_metric_check",
    "cmd_evolve",
    "cmd_converge",
]
