# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import unittest
import os
import tempfile
from qugal.utils import PathManager


class TestPathManager(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.output_directory = os.path.join(self.directory.name, "results")
        self.file_content = (f"# Example qugal_config file.\n"
                             f"QUGAL_OUT_DIR={self.output_directory}\n"
                             f"QUGAL_TEST_VARIABLE=some/path\n")
        self.config_file = os.path.join(self.directory.name, "qugal_config.env")
        with open(self.config_file, "w") as config_file:
            config_file.write(self.file_content)
        self.previous_output_directory = os.environ.get(PathManager.OUTPUT_DIRECTORY_VARIABLE)

    def tearDown(self):
        self.directory.cleanup()
        os.environ.pop("QUGAL_TEST_VARIABLE", None)
        if self.previous_output_directory is None:
            os.environ.pop(PathManager.OUTPUT_DIRECTORY_VARIABLE, None)
        else:
            os.environ[PathManager.OUTPUT_DIRECTORY_VARIABLE] = self.previous_output_directory

    @unittest.expectedFailure
    def test_instantiate_path_manager_with_wrong_path(self):
        PathManager("rubbish/path/does/not/exist")

    def test_instantiate_with_file(self):
        path_manager = PathManager(self.config_file)
        self.assertEqual(path_manager.environment_path, self.config_file)
        self.assertEqual(path_manager.get_output_directory(), self.output_directory)

    def test_instantiate_with_folder(self):
        path_manager = PathManager(self.directory.name)
        self.assertEqual(path_manager.get_path_from_environment("QUGAL_TEST_VARIABLE"), "some/path")

    def test_missing_variable_raises(self):
        path_manager = PathManager(self.config_file)
        with self.assertRaises(FileNotFoundError):
            path_manager.get_path_from_environment("QUGAL_VARIABLE_THAT_IS_NEVER_SET")
