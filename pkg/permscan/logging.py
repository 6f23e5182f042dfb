import logging
import sys

from termcolor import colored

VERBOSE = 5  # logging level lower than DEBUG
logging.VERBOSE = VERBOSE
logging.addLevelName(VERBOSE, colored('VERBOSE', 'blue'))

LOG_FORMAT = '%(levelname)-7s %(name)16s:%(lineno)-3s > %(message)s'
_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG, VERBOSE]


def setup_logging(verbosity: int = 0, stream=None):
    """
    Configure the ``permscan`` logger for command line use.

    :param verbosity: number of ``-v`` flags, 0 means warnings only
    :param stream: where to write records, stderr by default
    """
    level = _LEVELS[min(max(verbosity, 0), len(_LEVELS) - 1)]
    logger = logging.getLogger('permscan')
    logger.setLevel(level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    return logger
