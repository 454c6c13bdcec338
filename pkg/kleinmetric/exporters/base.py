from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..results.report import RunReport


class Exporter(ABC):
    @abstractmethod
    def export(self, report: "RunReport") -> None:
        """Export the run report."""
        pass
