# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import List, Tuple, Union
import numpy as np
from qugal.core.linalg import DensityMatrix, PureState, number_of_qubits
from qugal.log import Logger
from qugal.utils.constants import STATE_FILE_NORMALIZATION_TOLERANCE
from qugal.utils.quality_assurance.data_sanity_testing import DimensionMismatchError

logger = Logger()


class StateFileFormatError(ValueError):
    """
    Raised for state files that cannot be parsed. The message starts with "path:line:".
    """
    pass


def _content_lines(path: str) -> List[Tuple[int, str]]:
    with open(path, "r") as state_file:
        lines = [(_number, _line.split("#", 1)[0].strip()) for _number, _line in enumerate(state_file, start=1)]
    return [(_number, _line) for _number, _line in lines if _line]


def _parse_numbers(path: str, line_number: int, line: str) -> List[float]:
    try:
        numbers = [float(_token) for _token in line.split()]
    except ValueError:
        raise StateFileFormatError(f"{path}:{line_number}: expected real numbers, got '{line}'.") from None
    if not np.all(np.isfinite(numbers)):
        raise StateFileFormatError(f"{path}:{line_number}: non-finite value in '{line}'.")
    return numbers


def _parse_complex_row(path: str, line_number: int, line: str, expected: int) -> np.ndarray:
    numbers = _parse_numbers(path, line_number, line)
    if len(numbers) != 2 * expected:
        raise StateFileFormatError(f"{path}:{line_number}: expected {expected} 're im' pair(s), "
                                   f"got {len(numbers)} value(s).")
    return np.array(numbers[0::2]) + 1j * np.array(numbers[1::2])


def _read_pure_state(path: str, lines: List[Tuple[int, str]]) -> PureState:
    try:
        number_of_qubits(len(lines))
    except DimensionMismatchError:
        raise StateFileFormatError(f"{path}:{lines[-1][0]}: a state vector needs 2^n amplitude rows, "
                                   f"got {len(lines)}.") from None
    amplitudes = np.concatenate([_parse_complex_row(path, _number, _line, 1) for _number, _line in lines])
    norm = np.linalg.norm(amplitudes)
    if abs(norm - 1) > STATE_FILE_NORMALIZATION_TOLERANCE:
        raise StateFileFormatError(f"{path}:{lines[-1][0]}: the amplitudes have norm "
                                   f"{float(norm)!r}, more than {STATE_FILE_NORMALIZATION_TOLERANCE} away from one.")
    return PureState(amplitudes / norm)


def _read_density_matrix(path: str, lines: List[Tuple[int, str]]) -> DensityMatrix:
    header_number, header = lines[0]
    dimension = int(header)
    if dimension < 1 or (dimension & (dimension - 1)) != 0:
        raise StateFileFormatError(f"{path}:{header_number}: the dimension {dimension} is not a power of two.")
    rows = lines[1:]
    if len(rows) != dimension:
        last_line = rows[-1][0] if rows else header_number
        raise StateFileFormatError(f"{path}:{last_line}: expected {dimension} matrix rows, got {len(rows)}.")
    matrix = np.array([_parse_complex_row(path, _number, _line, dimension) for _number, _line in rows])
    trace = np.real(np.trace(matrix))
    if abs(trace - 1) > STATE_FILE_NORMALIZATION_TOLERANCE:
        raise StateFileFormatError(f"{path}:{rows[-1][0]}: the matrix has trace "
                                   f"{float(trace)!r}, more than {STATE_FILE_NORMALIZATION_TOLERANCE} away from one.")
    try:
        return DensityMatrix(matrix / trace)
    except ValueError as e:
        raise StateFileFormatError(f"{path}:{header_number}: {e}") from None


def load_state_file(path: str) -> Union[PureState, DensityMatrix]:
    """
    Reads a target state. Two layouts are accepted, '#' starts a comment:

    - a pure state: 2^n lines with one 're im' pair each
    - a density matrix: a line holding only the dimension d, followed by d lines of d 're im' pairs (row-major)

    Norm or trace deviations up to 1e-6 are renormalised, larger ones are rejected.

    :raises FileNotFoundError: if the file does not exist
    :raises StateFileFormatError: with a line-numbered diagnostic for anything unparseable
    """
    logger.debug(f"Loading the target state from {path}")
    lines = _content_lines(path)
    if not lines:
        raise StateFileFormatError(f"{path}:1: the file holds no state.")
    first_line = lines[0][1].split()
    if len(first_line) == 1 and first_line[0].isdigit():
        state = _read_density_matrix(path, lines)
    else:
        state = _read_pure_state(path, lines)
    logger.debug(f"Loaded {state!r} from {path}")
    return state


def write_state_file(state: Union[PureState, DensityMatrix], path: str):
    """
    Writes a state in the layout read by load_state_file.
    """
    with open(path, "w") as state_file:
        if isinstance(state, PureState):
            for amplitude in state.amplitudes:
                state_file.write(f"{float(amplitude.real)!r} {float(amplitude.imag)!r}\n")
        else:
            state_file.write(f"{state.dim}\n")
            for row in state.matrix:
                state_file.write(" ".join(f"{float(_v.real)!r} {float(_v.imag)!r}" for _v in row) + "\n")
