import logging

import colorlog

__all__ = ["_logger", "_logger_sweep", "_logger_cast", "set_verbosity"]

handler = colorlog.StreamHandler()
_formatter = colorlog.ColoredFormatter(
    fmt="%(log_color)s %(asctime)s [%(levelname)-8s] %(name)s: %(message)s"
)

handler.setFormatter(_formatter)

_logger = logging.getLogger("dirac_correlations")
_logger.addHandler(handler)
_logger.setLevel(logging.WARNING)

# child of the package logger: propagation is off so records are not printed twice
_logger_sweep = logging.getLogger("dirac_correlations.sweep")
_logger_sweep.addHandler(handler)
_logger_sweep.propagate = False
_logger_sweep.setLevel(logging.WARNING)

_logger_cast = logging.getLogger("type_caster")
_logger_cast.addHandler(handler)
_logger_cast.setLevel(logging.WARNING)


def set_verbosity(level: int) -> None:
    """Set all package loggers to the same level (used by the CLI `-v` flag)"""
    for logger in (_logger, _logger_sweep, _logger_cast):
        logger.setLevel(level)
