import logging

from cayleyqmc.settings import CAYLEYQMC_DEBUG_PREFIX
from cayleyqmc.settings import CAYLEYQMC_LOG_LEVEL


def create_logger(name):
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    # Console handler on stderr, data goes to stdout
    ch = logging.StreamHandler()
    ch.setLevel(logging.DEBUG)
    formatter = logging.Formatter(
        f'%(levelname)s:%(name)s:{CAYLEYQMC_DEBUG_PREFIX}%(message)s')
    ch.setFormatter(formatter)
    logger.addHandler(ch)
    logger.setLevel(CAYLEYQMC_LOG_LEVEL)
    logger.propagate = False
    return logger


def set_log_level(level):
    """Set the level of every ``cayleyqmc`` logger created so far.

    :keyword  level:  A :mod:`logging` level.
    :type     level:  ``int``
    """
    for name, logger in logging.Logger.manager.loggerDict.items():
        if name.startswith('cayleyqmc') and isinstance(logger, logging.Logger):
            logger.setLevel(level)


def require_positive(value, name, error):
    """Raise ``error`` unless ``value`` is a finite positive real."""
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise error(f'{name} must be a real number, got {value!r}')
    if not value > 0 or value == float('inf'):
        raise error(f'{name} must be positive and finite, got {value}')
    return value
