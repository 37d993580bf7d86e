# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import os
from dotenv import load_dotenv
from pathlib import Path
from qugal.log import Logger


class PathManager:
    """
    QuGAL reads machine specific paths, most importantly the default output directory of experiment runs, from
    the environment. The PathManager looks for a `qugal_config.env` file (a template is provided in
    `qugal_examples`) in the following places in this order and loads the first one it finds:

        1. The optional path you give the PathManager
        2. Your $HOME$ directory
        3. The current working directory
        4. The QuGAL home directory path

    Variables from the file override those of the process environment. If no file is found, the process
    environment is used as it is.
    """

    CONFIG_FILE_NAME = "qugal_config.env"
    OUTPUT_DIRECTORY_VARIABLE = "QUGAL_OUT_DIR"

    def __init__(self, environment_path: str = None):
        """
        :param environment_path: a qugal_config.env file or a folder containing one. If it is given, the file
            has to exist.
        :raises FileNotFoundError: if an explicitly given configuration file does not exist
        """
        self.logger = Logger()
        if environment_path is not None:
            self.environment_path = self.resolve_supplied_path(environment_path)
        else:
            self.environment_path = self.search_default_locations()

        if self.environment_path is None:
            self.logger.debug(f"No {self.CONFIG_FILE_NAME} found, using the process environment.")
        else:
            self.logger.debug(f"Loading path configuration from {self.environment_path}")
            load_dotenv(self.environment_path, override=True)

    def resolve_supplied_path(self, environment_path: str) -> str:
        candidate = Path(environment_path)
        if candidate.is_dir():
            candidate = candidate / self.CONFIG_FILE_NAME
        if not candidate.is_file():
            error_message = f"Did not find the config file {candidate}"
            self.logger.critical(error_message)
            raise FileNotFoundError(error_message)
        return str(candidate)

    def search_default_locations(self):
        """
        :return: the first qugal_config.env found in $HOME$, the working directory or the QuGAL home directory,
            None if there is none
        """
        qugal_home = Path(__file__).resolve().parents[2]
        for location, directory in (("$HOME$", Path.home()), ("the working directory", Path.cwd()),
                                    ("the QuGAL home directory", qugal_home)):
            candidate = directory / self.CONFIG_FILE_NAME
            if candidate.is_file():
                self.logger.debug(f"Found {self.CONFIG_FILE_NAME} in {location}: {candidate}")
                return str(candidate)
            self.logger.debug(f"No {self.CONFIG_FILE_NAME} in {location}")
        return None

    def get_output_directory(self) -> str:
        return self.get_path_from_environment(self.OUTPUT_DIRECTORY_VARIABLE)

    def get_path_from_environment(self, env_variable_name: str) -> str:
        env_variable_content = os.environ.get(env_variable_name)
        if env_variable_content is None:
            error_string = f"The path variable {env_variable_name} is neither set in the environment nor in " \
                f"the config file {self.environment_path}"
            self.logger.critical(error_string)
            raise FileNotFoundError(error_string)
        self.logger.debug(f"Retrieved {env_variable_name}={env_variable_content}")
        return env_variable_content
