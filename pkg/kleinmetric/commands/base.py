from abc import ABC, abstractmethod
from typing import List, Optional

from ..config.run_config import RunConfig
from ..exporters.base import Exporter
from ..exporters.files import FileExporter
from ..lattice.spectrum import KineticSpectrum, kinetic_spectrum
from ..logging import get_logger
from ..results.report import RunReport

logger = get_logger(__name__)


class Command(ABC):
    """One CLI subcommand: computes a RunReport from a validated RunConfig and exports it."""

    name: str

    def run(self, config: RunConfig, exporters: Optional[List[Exporter]] = None) -> RunReport:
        report = RunReport(command=self.name)
        self.execute(config, report)

        if exporters is None:
            exporters = [FileExporter(config.output.directory, config.output.format)]
        for exporter in exporters:
            exporter.export(report)

        logger.info(f"CLI: {self.name} finished with exit code {report.exit_code}")
        return report

    @abstractmethod
    def execute(self, config: RunConfig, report: RunReport) -> None:
        """Fill `report` with tables, documents and the exit code."""
        pass

    def spectrum(self, config: RunConfig) -> KineticSpectrum:
        return kinetic_spectrum(config.lattice)
