# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import argparse
import contextlib
import io
import json
import os
import tempfile
import unittest
import numpy as np
from qugal.cli import main, parse_seed_range, exit_code_for, ConfigurationError, EXIT_SUCCESS, EXIT_USAGE, \
    EXIT_UNKNOWN_NAME, EXIT_STATE_FILE, EXIT_DIMENSION_MISMATCH, EXIT_NUMERICAL, EXIT_FAILURE
from qugal.io_handling import StateFileFormatError
from qugal.utils.quality_assurance import DimensionMismatchError


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.out = os.path.join(self.directory.name, "results")

    def tearDown(self):
        self.directory.cleanup()

    def run_main(self, *argv):
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            code = main(list(argv))
        return code, stdout.getvalue()

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.directory.name, name)
        with open(path, "w") as text_file:
            text_file.write(text)
        return path

    def test_presets(self):
        code, output = self.run_main("presets")
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertIn("ghz-4q", output)
        self.assertIn("rho-sep-4q", output)

    def test_run_with_overrides(self):
        code, output = self.run_main("run", "--experiment", "qmmw-approx", "--set", "target=mixed-1q",
                                     "--set", "rounds=20", "--out", self.out)
        self.assertEqual(code, EXIT_SUCCESS)
        summary = json.loads(output)
        self.assertEqual(summary["experiment"], "qmmw-approx")
        self.assertEqual(summary["settings"]["rounds"], 20)
        self.assertTrue(os.path.isfile(os.path.join(self.out, "qmmw-approx.csv")))
        self.assertTrue(os.path.isfile(os.path.join(self.out, "qmmw-approx.json")))

    def test_run_with_config_file(self):
        config = self.write("run.cfg", "# approximation run\nexperiment = qmmw-approx\ntarget = mixed-1q\n"
                                       "rounds = 40\nrun_name = from_config\n")
        code, output = self.run_main("run", "--config", config, "--set", "rounds=20", "--out", self.out)
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertEqual(json.loads(output)["settings"]["rounds"], 20)
        self.assertTrue(os.path.isfile(os.path.join(self.out, "from_config.json")))

    def test_sweep(self):
        code, output = self.run_main("sweep", "--experiment", "qmmw-approx", "--set", "target=mixed-1q",
                                     "--set", "rounds=20", "--seeds", "0..2", "--workers", "2", "--out", self.out)
        self.assertEqual(code, EXIT_SUCCESS)
        summaries = json.loads(output)
        self.assertEqual(sorted(summaries), ["0", "1", "2"])
        self.assertEqual(summaries["2"]["seed"], 2)
        for seed in range(3):
            self.assertTrue(os.path.isfile(os.path.join(self.out, f"seed_{seed}", "qmmw-approx.csv")))

    def test_missing_experiment(self):
        self.assertEqual(self.run_main("run", "--out", self.out)[0], EXIT_USAGE)

    def test_unknown_experiment(self):
        self.assertEqual(self.run_main("run", "--experiment", "qmmw-fast", "--out", self.out)[0], EXIT_UNKNOWN_NAME)

    def test_unknown_preset(self):
        code, output = self.run_main("run", "--experiment", "qmmw-approx", "--set", "target=psi-nowhere",
                                     "--out", self.out)
        self.assertEqual(code, EXIT_UNKNOWN_NAME)
        self.assertIn("error", json.loads(output))

    def test_badly_typed_override(self):
        self.assertEqual(self.run_main("run", "--experiment", "qmmw-approx", "--set", "rounds=many")[0], EXIT_USAGE)

    def test_unknown_override_key(self):
        self.assertEqual(self.run_main("run", "--experiment", "qmmw-approx", "--set", "speed=2")[0], EXIT_USAGE)

    def test_missing_config_file(self):
        code = self.run_main("run", "--config", os.path.join(self.directory.name, "missing.cfg"))[0]
        self.assertEqual(code, EXIT_USAGE)

    def test_malformed_state_file(self):
        state_path = self.write("broken.txt", "1 0\n1 0\n")
        code = self.run_main("run", "--experiment", "qmmw-approx", "--set", f"target={state_path}",
                             "--out", self.out)[0]
        self.assertEqual(code, EXIT_STATE_FILE)

    def test_dimension_mismatch(self):
        code = self.run_main("run", "--experiment", "qmmw-enttest", "--set", "split=1|1", "--set", "rounds=100",
                             "--out", self.out)[0]
        self.assertEqual(code, EXIT_DIMENSION_MISMATCH)

    def test_argument_errors(self):
        with contextlib.redirect_stderr(io.StringIO()):
            self.assertEqual(self.run_main()[0], EXIT_USAGE)
            self.assertEqual(self.run_main("sweep", "--experiment", "qmmw-approx", "--seeds", "3..1")[0],
                             EXIT_USAGE)
        self.assertEqual(self.run_main("sweep", "--experiment", "qmmw-approx", "--seeds", "0..1",
                                       "--workers", "0")[0], EXIT_USAGE)


class TestCliHelpers(unittest.TestCase):

    def test_parse_seed_range(self):
        self.assertEqual(parse_seed_range("3..7"), [3, 4, 5, 6, 7])
        self.assertEqual(parse_seed_range("4"), [4])
        for text in ("a..b", "5..2", "-1..2"):
            with self.assertRaises(argparse.ArgumentTypeError):
                parse_seed_range(text)

    def test_exit_codes(self):
        self.assertEqual(exit_code_for(ConfigurationError("x")), EXIT_USAGE)
        self.assertEqual(exit_code_for(KeyError("x")), EXIT_UNKNOWN_NAME)
        self.assertEqual(exit_code_for(StateFileFormatError("x")), EXIT_STATE_FILE)
        self.assertEqual(exit_code_for(DimensionMismatchError("x")), EXIT_DIMENSION_MISMATCH)
        self.assertEqual(exit_code_for(AssertionError("x")), EXIT_NUMERICAL)
        self.assertEqual(exit_code_for(np.linalg.LinAlgError("x")), EXIT_NUMERICAL)
        self.assertEqual(exit_code_for(ValueError("x")), EXIT_USAGE)
        self.assertEqual(exit_code_for(RuntimeError("x")), EXIT_FAILURE)
