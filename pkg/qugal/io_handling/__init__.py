# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.io_handling.io_hdf5 import load_hdf5
from qugal.io_handling.io_hdf5 import save_hdf5
from qugal.io_handling.state_files import load_state_file, write_state_file, StateFileFormatError
from qugal.io_handling.trace_files import write_trace_csv, read_trace_csv, write_summary_json, \
    read_summary_json, validate_summary, SUMMARY_SCHEMA
from qugal.io_handling.settings_files import load_settings_file, apply_overrides, parse_assignment, coerce_value
