# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import logging
from pathlib import Path
import sys


class Logger:
    """
    Process-wide logger of QuGAL. The first instantiation configures a console handler (INFO and above) and a log
    file handler (everything); later instantiations return the same object unless force_new_instance is set.
    The log file defaults to ~/qugal.log.

    Levels as used throughout the package:
    DEBUG: per-round progress of the training loops, hyper-parameters, file locations.
    INFO: start and end of runs and experiments.
    WARNING: degenerate situations that are handled, e.g. the zero-loss weighting fallback.
    ERROR: an experiment of a sweep could not be completed.
    CRITICAL: a validation error that is about to be raised.
    """
    LOGGER_NAME = "QuGAL Logger"
    FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
    DEFAULT_LOG_FILE = str(Path.home() / "qugal.log")

    _instance = None
    _logger = None

    def __new__(cls, path: str = None, force_new_instance: bool = False, console_level: int = logging.INFO):
        if cls._instance is None or force_new_instance:
            cls._instance = super(Logger, cls).__new__(cls)
            cls._configure(path or cls.DEFAULT_LOG_FILE, console_level)
        return cls._instance

    @classmethod
    def _configure(cls, path: str, console_level: int):
        cls._logger = logging.getLogger(cls.LOGGER_NAME)
        cls._logger.setLevel(logging.DEBUG)
        # a forced re-instantiation must not stack handlers on the shared logging.Logger
        for handler in list(cls._logger.handlers):
            cls._logger.removeHandler(handler)
            handler.close()

        formatter = logging.Formatter(cls.FORMAT)
        for handler, level in ((logging.StreamHandler(stream=sys.stdout), console_level),
                               (logging.FileHandler(path, mode="w"), logging.DEBUG)):
            handler.setLevel(level)
            handler.setFormatter(formatter)
            cls._logger.addHandler(handler)

    def set_console_level(self, level: int):
        """
        Changes what reaches stdout (the command line maps --quiet and --verbose onto this).
        The log file keeps receiving every message.

        :param level: a python logging level, e.g. logging.WARNING
        """
        for handler in self._logger.handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(level)

    def debug(self, msg):
        self._logger.debug(msg)

    def info(self, msg):
        self._logger.info(msg)

    def warning(self, msg):
        self._logger.warning(msg)

    def error(self, msg):
        self._logger.error(msg)

    def critical(self, msg):
        """
        Used right before a validation error is raised, so the reason ends up in the log file as well.
        """
        self._logger.critical(msg)
