# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT
import os
import shutil
import tempfile
from abc import abstractmethod
from qugal.utils import Tags, Settings


class ManualIntegrationTestClass(object):

    @abstractmethod
    def setup(self):
        pass

    @abstractmethod
    def perform_test(self):
        pass

    @abstractmethod
    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        pass

    def tear_down(self):
        if hasattr(self, "output_directory"):
            shutil.rmtree(self.output_directory, ignore_errors=True)

    def experiment_settings(self, experiment: str, run_name: str, entries: dict = None) -> Settings:
        """
        Settings of one run that writes into the temporary output directory of this test.
        """
        if not hasattr(self, "output_directory"):
            self.output_directory = tempfile.mkdtemp(prefix="qugal_manual_")
        settings = Settings({Tags.EXPERIMENT: experiment, Tags.OUTPUT_PATH: self.output_directory,
                             Tags.RUN_NAME: run_name})
        for tag, value in (entries or {}).items():
            settings[tag] = value
        return settings

    @staticmethod
    def require_pass_rate(description: str, passed: int, total: int, required: int):
        print(f"{description}: {passed}/{total} (required {required})")
        if passed < required:
            raise AssertionError(f"Only {passed}/{total} {description}, at least {required} required.")

    def run_test(self, show_figure_on_screen=True, save_path=None):
        if save_path is None or not os.path.isdir(save_path):
            save_path = "figures/"
        if not os.path.exists(save_path):
            os.mkdir(save_path)

        self.setup()
        self.perform_test()
        self.visualise_result(show_figure_on_screen, save_path)
        self.tear_down()
