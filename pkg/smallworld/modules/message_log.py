"""
Message log module for the Small World toolkit.
A single tagged channel for progress and diagnostics, backed by logging.
"""

import logging
import sys


class Level:
    """Message levels"""

    INFO = logging.INFO
    SUCCESS = 25
    WARNING = logging.WARNING
    CRITICAL = logging.CRITICAL


logging.addLevelName(Level.SUCCESS, 'SUCCESS')


class StderrHandler(logging.StreamHandler):
    """Stream handler bound to whatever sys.stderr is when a record is emitted"""

    def __init__(self):
        logging.Handler.__init__(self)

    @property
    def stream(self):
        return sys.stderr


class MessageLog:
    """Routes messages to the logger named after their tag"""

    DEFAULT_TAG = 'Small World'
    FORMAT = '%(asctime)s %(levelname)s [%(name)s] %(message)s'

    @staticmethod
    def logger_name(tag):
        """Logger name for a tag, e.g. 'Small World' -> 'small_world'"""
        return tag.strip().lower().replace(' ', '_')

    @classmethod
    def log_message(cls, message, tag=DEFAULT_TAG, level=Level.INFO):
        """Log a message on the channel of the given tag"""
        logging.getLogger(cls.logger_name(tag)).log(level, message)

    @classmethod
    def configure(cls, level_name='INFO', stream=None):
        """Send the default channel to stderr (or the given stream) at the given level"""
        level = logging.getLevelName(str(level_name).upper())
        if not isinstance(level, int):
            raise ValueError(f"Unknown log level: {level_name}")

        logger = logging.getLogger(cls.logger_name(cls.DEFAULT_TAG))
        logger.setLevel(level)
        for handler in [h for h in logger.handlers if getattr(h, '_small_world', False)]:
            logger.removeHandler(handler)
        handler = logging.StreamHandler(stream) if stream is not None else StderrHandler()
        handler.setFormatter(logging.Formatter(cls.FORMAT))
        handler._small_world = True
        logger.addHandler(handler)
        return logger
