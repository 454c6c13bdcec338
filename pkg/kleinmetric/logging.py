import logging
from rich.console import Console
from rich.logging import RichHandler

_console = Console(stderr=True)
_configured_loggers = set()
_level = logging.INFO


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)

    if name not in _configured_loggers:
        logger.addHandler(RichHandler(console=_console, rich_tracebacks=True, show_path=False))
        logger.setLevel(_level)
        logger.propagate = False
        _configured_loggers.add(name)

    return logger


def set_level(level: str) -> None:
    """Set the level of every kleinmetric logger, including ones created later."""
    global _level
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    _level = numeric
    for name in _configured_loggers:
        logging.getLogger(name).setLevel(numeric)
