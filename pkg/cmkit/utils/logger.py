import logging
import os
import sys


def _resolve_level() -> int:
    """Read LOG_LEVEL, forced to DEBUG when DEBUG is truthy."""
    level_name = os.getenv('LOG_LEVEL', 'INFO').upper()
    if os.getenv('DEBUG', 'False').lower() in ['true', '1', 'yes']:
        level_name = 'DEBUG'
    return logging.getLevelNamesMapping().get(level_name, logging.INFO)


current_log_level = _resolve_level()

# stdout is reserved for report data
console_handler = logging.StreamHandler(sys.stderr)
console_handler.setLevel(current_log_level)
console_handler.setFormatter(
    logging.Formatter(
        '{asctime} - {name}:{levelname} - {message}',
        style='{',
        datefmt='%Y-%m-%d %H:%M',
    )
)

cmkit_logger = logging.getLogger('cmkit')
cmkit_logger.setLevel(current_log_level)
cmkit_logger.addHandler(console_handler)
cmkit_logger.propagate = False


def get_logger(component: str) -> logging.Logger:
    """Return the child logger for one cmkit component, e.g. ``kernels``."""
    return cmkit_logger.getChild(component)


cmkit_logger.debug(f'Logger initialized at level {logging.getLevelName(current_log_level)}')
