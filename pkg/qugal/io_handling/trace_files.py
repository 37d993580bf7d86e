# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import json
from numbers import Integral, Real
import numpy as np
import pandas as pd
from qugal.log import Logger
from qugal.utils.tags import Tags

logger = Logger()

CSV_FLOAT_FORMAT = "%.17g"

# key: (accepted types, required)
SUMMARY_SCHEMA = {
    "experiment": (str, True),
    "version": (str, True),
    "seed": ((Integral, type(None)), True),
    "final_loss": (Real, True),
    "final_fidelity": (Real, True),
    "settings": (dict, True),
    "verdict": (str, False),
    "bounds": (dict, False),
    "regret": (dict, False),
    "gate_counts": (dict, False),
    "details": (dict, False),
}


def write_trace_csv(trace_frame: pd.DataFrame, file_path: str):
    """
    Writes a per-round trace with the columns round, loss, fidelity, gen_regret_rate, disc_regret_rate.
    Floats carry 17 significant digits and missing regret rates are left empty, so reruns are byte-identical.

    :raises KeyError: if a column is missing
    :raises AssertionError: if a loss lies outside [0, 1]
    """
    missing = [_column for _column in Tags.TRACE_COLUMNS if _column not in trace_frame.columns]
    if missing:
        raise KeyError(f"The trace is missing the columns {missing}.")
    trace_frame = trace_frame[list(Tags.TRACE_COLUMNS)]
    losses = trace_frame["loss"].to_numpy(dtype=float)
    if np.any((losses < 0) | (losses > 1)):
        raise AssertionError(f"Trace losses have to lie in [0, 1], got the range [{losses.min()}, {losses.max()}].")
    trace_frame.to_csv(file_path, index=False, float_format=CSV_FLOAT_FORMAT, na_rep="", lineterminator="\n")
    logger.debug(f"Wrote {len(trace_frame)} trace rows to {file_path}")


def read_trace_csv(file_path: str) -> pd.DataFrame:
    return pd.read_csv(file_path, dtype={"round": int})


def _plain(value):
    if isinstance(value, dict):
        return {str(_k): _plain(_v) for _k, _v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(_v) for _v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def validate_summary(summary: dict):
    """
    :raises ValueError: if the summary does not follow SUMMARY_SCHEMA
    """
    if not isinstance(summary, dict):
        raise ValueError(f"A run summary has to be a JSON object, got {type(summary).__name__}.")
    for key, (types, required) in SUMMARY_SCHEMA.items():
        if key not in summary:
            if required:
                raise ValueError(f"The run summary is missing the required key '{key}'.")
            continue
        value = summary[key]
        if isinstance(value, bool) and types in (Real, (Integral, type(None))):
            raise ValueError(f"The summary entry '{key}' has to be numeric, got {value}.")
        if not isinstance(value, types):
            raise ValueError(f"The summary entry '{key}' has the wrong type {type(value).__name__}.")
    for key in ("final_loss", "final_fidelity"):
        if not 0 <= summary[key] <= 1 + 1e-9:
            raise ValueError(f"The summary entry '{key}' has to lie in [0, 1], but was {summary[key]}.")


def write_summary_json(summary: dict, file_path: str) -> dict:
    """
    Validates the summary and writes it with sorted keys.

    :return: the summary as written, with numpy values converted to plain python values
    """
    summary = _plain(summary)
    validate_summary(summary)
    with open(file_path, "w") as json_file:
        json.dump(summary, json_file, sort_keys=True, indent=2)
        json_file.write("\n")
    logger.debug(f"Wrote the run summary to {file_path}")
    return summary


def read_summary_json(file_path: str) -> dict:
    with open(file_path, "r") as json_file:
        summary = json.load(json_file)
    validate_summary(summary)
    return summary
