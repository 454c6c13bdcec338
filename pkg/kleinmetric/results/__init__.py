from .report import RunReport

__all__ = ["RunReport"]
