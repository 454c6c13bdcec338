from .base import Exporter
from .files import FileExporter, to_jsonable
from .terminal import TerminalExporter

__all__ = ["Exporter", "FileExporter", "TerminalExporter", "to_jsonable"]
