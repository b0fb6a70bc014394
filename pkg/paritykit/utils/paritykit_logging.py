"""
ParityKit Logger
================

Overview:
---------
Thin wrapper around the standard logger that every module uses. Lines go to a
rotating file under the project's logs directory so that validation runs,
enumerations and searches leave a trace without printing anything.

The directory can be moved with PARITYKIT_LOG_DIR.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler

from paritykit.utils.utilities import env_setting

DEFAULT_LOG_FILE = 'paritykit.log'


def _project_root():
    current_dir = os.path.dirname(os.path.abspath(__file__))
    # Two levels up from paritykit/utils
    return os.path.dirname(os.path.dirname(current_dir))


def resolve_log_dir():
    return env_setting('PARITYKIT_LOG_DIR') or os.path.join(_project_root(), 'logs')


class ParityLogging:
    def __init__(self, name, log_file=DEFAULT_LOG_FILE, log_level=logging.INFO):
        self.logger = logging.getLogger(f"paritykit.{name}")
        self.logger.setLevel(log_level)

        # One handler per logger name, however many times the wrapper is built
        if not self.logger.handlers:
            log_dir = resolve_log_dir()
            os.makedirs(log_dir, exist_ok=True)

            handler = RotatingFileHandler(os.path.join(log_dir, log_file), maxBytes=10 * 1024 * 1024, backupCount=5)
            formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)
            self.logger.propagate = False

    def set_level(self, log_level):
        self.logger.setLevel(log_level)

    @staticmethod
    def set_package_level(log_level):
        """Set the level of every paritykit logger created so far."""
        for name, existing in logging.root.manager.loggerDict.items():
            if name.startswith("paritykit.") and isinstance(existing, logging.Logger):
                existing.setLevel(log_level)

    def debug(self, message, **kwargs):
        self.logger.debug(f"{message} | {kwargs}" if kwargs else message)

    def info(self, message, **kwargs):
        self.logger.info(f"{message} | {kwargs}" if kwargs else message)

    def warning(self, message, **kwargs):
        self.logger.warning(f"{message} | {kwargs}" if kwargs else message)

    def error(self, message, exc_info=False, **kwargs):
        self.logger.error(f"{message} | {kwargs}" if kwargs else message, exc_info=exc_info)


if __name__ == "__main__":
    def validate_logging():
        logger = ParityLogging("LoggingCheck")

        print("Testing info logging...")
        logger.info("Test info message", structure="oriental-2")

        print("Testing warning logging...")
        logger.warning("Test warning message", flag="weakly_loop_free")

        print("Testing error logging...")
        try:
            1 / 0
        except ZeroDivisionError:
            logger.error("Test error message", exc_info=True)

        log_file_path = os.path.join(resolve_log_dir(), DEFAULT_LOG_FILE)
        if os.path.exists(log_file_path):
            print(f"Log file created successfully at: {log_file_path}")
        else:
            print(f"Error: Log file not found at {log_file_path}")

    validate_logging()
    sys.exit(0)
