from dataclasses import dataclass, field
from typing import Any, Dict

import pandas as pd


@dataclass
class RunReport:
    """Everything one command produced: named tables, named JSON documents and the exit code.

    Example:
        >>> report = RunReport(command="spectrum")
        >>> report.add_table("spectrum", frame)
        >>> report.add_summary("lowest energy", 1.0)
    """

    command: str
    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    documents: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    highlights: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    def add_table(self, name: str, frame: pd.DataFrame) -> None:
        if name in self.tables or name in self.documents:
            raise ValueError(f"Output '{name}' already exists in the {self.command} report")
        self.tables[name] = frame

    def add_document(self, name: str, document: Dict[str, Any]) -> None:
        if name in self.tables or name in self.documents:
            raise ValueError(f"Output '{name}' already exists in the {self.command} report")
        self.documents[name] = document

    def add_summary(self, key: str, value: Any) -> None:
        self.highlights[key] = value

    def summary(self) -> pd.DataFrame:
        rows = [{"quantity": key, "value": value} for key, value in self.highlights.items()]
        rows.append({"quantity": "exit code", "value": self.exit_code})
        return pd.DataFrame(rows, columns=["quantity", "value"])
