from pathlib import Path
from typing import Any, List, Union
import json
import math
import os
import tempfile

import numpy as np

from ..errors import ConfigurationError
from ..logging import get_logger
from ..results.report import RunReport
from .base import Exporter

logger = get_logger(__name__)

FORMATS = ("csv", "json")


def to_jsonable(value: Any) -> Any:
    """Plain-Python copy of `value` with non-finite floats mapped to None."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class FileExporter(Exporter):
    """Writes tables as `<name>.csv` or `<name>.json` and documents as `<name>.json`.

    Every file is written to a temporary file in the target directory and moved into place
    with `os.replace`, so readers never see a partial file.

    Example:
        >>> FileExporter("results", format="csv").export(report)
    """

    def __init__(self, directory: Union[str, Path], format: str = "csv"):
        if format not in FORMATS:
            raise ConfigurationError(f"Unknown output format '{format}', expected one of: {', '.join(FORMATS)}")
        self.directory = Path(directory)
        self.format = format
        self.written: List[Path] = []

    def export(self, report: RunReport) -> None:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            for name, frame in report.tables.items():
                if self.format == "csv":
                    self._write(f"{name}.csv", frame.to_csv(index=False, float_format="%.17g", lineterminator="\n"))
                else:
                    self._write(f"{name}.json", self._dumps(frame.to_dict(orient="records")))
            for name, document in report.documents.items():
                self._write(f"{name}.json", self._dumps(document))
        except OSError as e:
            raise ConfigurationError(f"Cannot write to output directory {self.directory}: {e.strerror or e}") from e

    def _dumps(self, payload: Any) -> str:
        return json.dumps(to_jsonable(payload), indent=2) + "\n"

    def _write(self, filename: str, text: str) -> None:
        target = self.directory / filename
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=f".{filename}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", newline="") as f:
                f.write(text)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self.written.append(target)
        logger.info(f"Export: Wrote {target}")
