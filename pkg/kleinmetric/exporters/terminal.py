from typing import List, Optional

import pandas as pd
from rich.console import Console
from rich.table import Table

from ..results.report import RunReport
from .base import Exporter


class TerminalExporter(Exporter):
    def __init__(self, show: Optional[List[str]] = None, max_rows: int = 12, console: Optional[Console] = None):
        """
        Args:
            show: Which parts to display: "summary" and/or table names of the report.
                  Defaults to ["summary"].
            max_rows: Longer tables are cut to their first and last rows.
        """
        self.show = show or ["summary"]
        self.max_rows = max_rows
        self.console = console or Console()

    def export(self, report: RunReport) -> None:
        if "summary" in self.show:
            self.console.print(f"\n[bold]{report.command}[/bold]")
            self.console.print(self._df_to_table(report.summary()))

        for name, frame in report.tables.items():
            if name in self.show:
                self.console.print(f"\n[bold]{name}[/bold]")
                self.console.print(self._df_to_table(self._clip(frame)))

    def _clip(self, df: pd.DataFrame) -> pd.DataFrame:
        if len(df) <= self.max_rows:
            return df
        half = self.max_rows // 2
        return pd.concat([df.head(half), df.tail(half)])

    def _df_to_table(self, df: pd.DataFrame) -> Table:
        table = Table()
        for col in df.columns:
            table.add_column(str(col))
        for _, row in df.iterrows():
            table.add_row(*[self._format(v) for v in row])
        return table

    def _format(self, value) -> str:
        if isinstance(value, float):
            return f"{value:.4f}"
        return str(value)
