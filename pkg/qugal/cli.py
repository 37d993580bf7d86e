# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

"""
Command line interface of QuGAL.

    qugal run --experiment qmmw-approx [--config run.cfg] [--set rounds=1600]... [--out results/]
    qugal sweep --experiment qugan-enttest --seeds 0..4 [--workers 4] ...
    qugal presets
"""

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple
import numpy as np
from qugal.core.experiment import run_experiment
from qugal.io_handling import load_settings_file, apply_overrides, StateFileFormatError
from qugal.log import Logger
from qugal.utils import Settings, Tags, PathManager
from qugal.utils.libraries.state_library import STATE_LIBRARY
from qugal.utils.quality_assurance.data_sanity_testing import DimensionMismatchError

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNKNOWN_NAME = 3
EXIT_STATE_FILE = 4
EXIT_DIMENSION_MISMATCH = 5
EXIT_NUMERICAL = 6

logger = Logger()


class ConfigurationError(Exception):
    """
    Wraps errors in configuration files, overrides or the output directory.
    """
    pass


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, ConfigurationError):
        return EXIT_USAGE
    if isinstance(error, KeyError):
        return EXIT_UNKNOWN_NAME
    if isinstance(error, StateFileFormatError):
        return EXIT_STATE_FILE
    if isinstance(error, DimensionMismatchError):
        return EXIT_DIMENSION_MISMATCH
    if isinstance(error, (AssertionError, FloatingPointError, np.linalg.LinAlgError)):
        return EXIT_NUMERICAL
    if isinstance(error, (ValueError, TypeError)):
        return EXIT_USAGE
    return EXIT_FAILURE


def parse_seed_range(text: str) -> List[int]:
    """
    "3..7" -> [3, 4, 5, 6, 7]; a single number is a range of one seed.
    """
    first, separator, last = text.partition("..")
    try:
        first = int(first)
        last = int(last) if separator else first
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected a seed range 'a..b', got '{text}'.") from None
    if first < 0 or last < first:
        raise argparse.ArgumentTypeError(f"Expected 0 <= a <= b in the seed range, got '{text}'.")
    return list(range(first, last + 1))


def build_settings(args, seed: int = None, output_directory: str = None) -> Settings:
    """
    Settings of one run: the configuration file, then the --set overrides, then --experiment, --out and the
    seed of a sweep.

    :raises ConfigurationError: for unreadable files, unknown keys or badly typed values
    """
    try:
        settings = Settings()
        if args.config is not None:
            load_settings_file(args.config, settings)
        apply_overrides(settings, args.set)
        if args.experiment is not None:
            settings[Tags.EXPERIMENT] = args.experiment
        if seed is not None:
            settings[Tags.RANDOM_SEED] = seed
        if output_directory is not None:
            settings[Tags.OUTPUT_PATH] = output_directory
        elif args.out is not None:
            settings[Tags.OUTPUT_PATH] = args.out
        elif Tags.OUTPUT_PATH not in settings:
            settings[Tags.OUTPUT_PATH] = PathManager().get_output_directory()
    except (OSError, KeyError, ValueError, TypeError) as e:
        raise ConfigurationError(str(e)) from e
    if Tags.EXPERIMENT not in settings:
        raise ConfigurationError("No experiment given; use --experiment or 'experiment=' in the configuration.")
    return settings


def _run_one(settings: Settings) -> Tuple[int, dict]:
    try:
        record = run_experiment(settings)
        return EXIT_SUCCESS, record.summary
    except Exception as e:
        logger.error(f"{type(e).__name__}: {e}")
        return exit_code_for(e), {"error": f"{type(e).__name__}: {e}"}


def command_run(args) -> int:
    try:
        settings = build_settings(args)
    except ConfigurationError as e:
        logger.error(str(e))
        return EXIT_USAGE
    code, summary = _run_one(settings)
    print(json.dumps(summary, sort_keys=True, indent=2))
    return code


def command_sweep(args) -> int:
    base_directory = args.out
    try:
        if base_directory is None:
            default_settings = build_settings(args)
            base_directory = default_settings[Tags.OUTPUT_PATH]
        runs = [build_settings(args, seed=_seed, output_directory=os.path.join(base_directory, f"seed_{_seed}"))
                for _seed in args.seeds]
    except ConfigurationError as e:
        logger.error(str(e))
        return EXIT_USAGE

    logger.info(f"Sweeping {len(runs)} seeds with {args.workers} worker(s)...")
    with ThreadPoolExecutor(max_workers=args.workers) as executor:
        results = list(executor.map(_run_one, runs))
    logger.info(f"Sweeping {len(runs)} seeds with {args.workers} worker(s)...[Done]")

    print(json.dumps({str(_seed): _summary for _seed, (_, _summary) in zip(args.seeds, results)},
                     sort_keys=True, indent=2))
    return next((_code for _code, _ in results if _code != EXIT_SUCCESS), EXIT_SUCCESS)


def command_presets(args) -> int:
    for name in STATE_LIBRARY.names():
        print(f"{name:12s} {STATE_LIBRARY.describe(name)}")
    return EXIT_SUCCESS


def _add_run_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--experiment", help="experiment name, e.g. qmmw-approx")
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        help="override a configuration entry; may be repeated")
    parser.add_argument("--out", help=f"output directory (default: ${PathManager.OUTPUT_DIRECTORY_VARIABLE})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qugal", description="Quantum generative adversarial learning experiments")
    parser.add_argument("--verbose", action="store_true", help="print debug messages")
    parser.add_argument("--quiet", action="store_true", help="only print warnings and errors")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="run one experiment")
    _add_run_arguments(run_parser)
    run_parser.set_defaults(handler=command_run)

    sweep_parser = subparsers.add_parser("sweep", help="run one experiment for a range of seeds")
    _add_run_arguments(sweep_parser)
    sweep_parser.add_argument("--seeds", type=parse_seed_range, required=True, help="seed range a..b (inclusive)")
    sweep_parser.add_argument("--workers", type=int, default=1, help="number of worker threads")
    sweep_parser.set_defaults(handler=command_sweep)

    presets_parser = subparsers.add_parser("presets", help="list the named target states")
    presets_parser.set_defaults(handler=command_presets)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_SUCCESS
    if args.verbose:
        logger.set_console_level(logging.DEBUG)
    elif args.quiet:
        logger.set_console_level(logging.WARNING)
    if getattr(args, "workers", 1) < 1:
        logger.error("--workers has to be at least 1.")
        return EXIT_USAGE
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
