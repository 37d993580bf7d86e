# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from importlib.metadata import version, PackageNotFoundError
import os
import time
import pandas as pd
from qugal.core.experiments import EXPERIMENT_REGISTRY
from qugal.io_handling import save_hdf5, write_trace_csv, write_summary_json
from qugal.log import Logger
from qugal.utils import Tags, Settings, PathManager


def qugal_version() -> str:
    try:
        return version("qugal")
    except PackageNotFoundError:
        return "unknown"


class RunRecord:
    """
    Everything a run wrote: the settings it ran with, the summary, the per-round trace and the output paths.
    """

    def __init__(self, settings: Settings, summary: dict, trace_frame: pd.DataFrame, csv_path: str,
                 json_path: str, hdf5_path: str = None):
        self.settings = settings
        self.summary = summary
        self.trace_frame = trace_frame
        self.csv_path = csv_path
        self.json_path = json_path
        self.hdf5_path = hdf5_path


def run_experiment(settings: Settings) -> RunRecord:
    """
    This method is the starting point for every QuGAL experiment. It looks up the experiment named in the
    settings, runs it and writes `<run_name>.csv` (per-round trace), `<run_name>.json` (summary) and, if
    requested, `<run_name>.hdf5` to the output directory.

    :param settings: settings dictionary containing at least Tags.EXPERIMENT
    :raises TypeError: if settings is not a Settings instance
    :raises KeyError: if the experiment or the target preset is unknown
    :return: the RunRecord of the run
    """
    start_time = time.time()
    logger = Logger()
    if not isinstance(settings, Settings):
        logger.critical("The argument was not a settings instance!")
        raise TypeError("Use a Settings instance from qugal.utils.settings as experiment input.")
    if Tags.EXPERIMENT not in settings:
        logger.critical("No experiment was given in the settings!")
        raise KeyError(f"The settings have to name an experiment: {', '.join(sorted(EXPERIMENT_REGISTRY))}")
    experiment_name = settings[Tags.EXPERIMENT]
    if experiment_name not in EXPERIMENT_REGISTRY:
        msg = f"Unknown experiment '{experiment_name}'. Available: {', '.join(sorted(EXPERIMENT_REGISTRY))}"
        logger.critical(msg)
        raise KeyError(msg)

    if Tags.OUTPUT_PATH not in settings:
        settings[Tags.OUTPUT_PATH] = PathManager().get_output_directory()
    output_directory = settings[Tags.OUTPUT_PATH]
    os.makedirs(output_directory, exist_ok=True)
    run_name = settings.get_value_or_default(Tags.RUN_NAME, experiment_name)
    output_base = os.path.join(output_directory, run_name)

    logger.info(f"Running experiment {experiment_name}...")
    result = EXPERIMENT_REGISTRY[experiment_name](settings).run()
    logger.info(f"Running experiment {experiment_name}...[Done]")

    summary = {"experiment": experiment_name, "version": qugal_version(),
               "seed": settings.get_value_or_default(Tags.RANDOM_SEED, None),
               "settings": settings.as_plain_dict()}
    summary.update(result.summary_fields())

    logger.debug("Saving trace and summary...")
    csv_path = output_base + ".csv"
    json_path = output_base + ".json"
    write_trace_csv(result.trace_frame, csv_path)
    summary = write_summary_json(summary, json_path)
    hdf5_path = None
    if settings.get_value_or_default(Tags.SAVE_HDF5_ARCHIVE, False):
        hdf5_path = output_base + ".hdf5"
        save_hdf5({Tags.SETTINGS: settings, Tags.STATES: result.states}, hdf5_path)
    logger.debug("Saving trace and summary...[Done]")

    logger.info(f"The experiment {experiment_name} required {time.time() - start_time:.2f} seconds.")
    return RunRecord(settings, summary, result.trace_frame, csv_path, json_path, hdf5_path)
