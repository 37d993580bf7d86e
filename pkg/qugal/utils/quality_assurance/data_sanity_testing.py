# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
import inspect
from qugal.utils.constants import HERMITIAN_TOLERANCE
from qugal.log import Logger


class DimensionMismatchError(ValueError):
    """
    Raised when matrices, states, circuits or bipartitions do not have compatible dimensions.
    """
    pass


def assert_equal_dimensions(matrices: list, names: list = None):
    """
    This method takes a list of square matrices (or vectors) and raises a DimensionMismatchError if the
    dimensions of all of them do not match.

    :param matrices: a list of np.ndarray
    :param names: optional names of the matrices for the error message
    :raises DimensionMismatchError: if there is a mismatch between any of the dimensions.
    """

    if len(matrices) < 2:
        return

    dimensions = [np.shape(_matrix)[0] for _matrix in matrices]
    if len(set(dimensions)) > 1:
        if names is None:
            names = [f"#{_idx}" for _idx in range(len(matrices))]
        listing = ", ".join(f"{_name}: {_dim}" for _name, _dim in zip(names, dimensions))
        error_message = f"The given operands did not all have the same dimension ({listing})." \
                        f" Called from {inspect.stack()[1].function}"
        Logger().critical(error_message)
        raise DimensionMismatchError(error_message)


def assert_square_matrix(matrix: np.ndarray, matrix_name: str = None):
    """
    :param matrix: the array to test
    :param matrix_name: a string that gives more information in case of an error.
    :raises DimensionMismatchError: if the array is not a non-empty square matrix.
    """
    shape = np.shape(matrix)
    if len(shape) != 2 or shape[0] != shape[1] or shape[0] < 1:
        error_message = f"The matrix {matrix_name} must be square and non-empty, but has shape {shape}."
        Logger().critical(error_message)
        raise DimensionMismatchError(error_message)


def assert_array_well_defined(array: np.ndarray, assume_non_negativity: bool = False,
                              assume_positivity=False, array_name: str = None):
    """
    This method tests if all entries of the given array are well-defined (i.e. not np.inf, np.nan, or None).
    The method can be parametrised to be more strict for real arrays.

    :param array: The input np.ndarray (real or complex)
    :param assume_non_negativity: bool (default: False). If true, all values must be greater than or equal to 0.
    :param assume_positivity: bool (default: False). If true, all values must be greater than 0.
    :param array_name: a string that gives more information in case of an error.
    :raises AssertionError: if there are any unexpected values in the given array.
    """

    error_message = None
    array = np.asarray(array)
    if array.dtype == object or not np.all(np.isfinite(array)):
        error_message = "nan, inf, -inf or None"
    elif assume_positivity and np.any(np.real(array) <= 0):
        error_message = "not positive"
    elif assume_non_negativity and np.any(np.real(array) < 0):
        error_message = "negative"
    if error_message:
        if array_name is None:
            array_name = "'Not specified'"
        caller = inspect.stack()[1]
        stack_string = f" \n\tArray Name: {array_name} \n\tCaller: {caller.filename}" \
                       f" \n\tline: {caller.lineno} \n\tcode: {caller.code_context}"
        error_message = f"The given array contained values that were {error_message}. Info: {stack_string}."
        Logger().critical(error_message)
        raise AssertionError(error_message)


def assert_hermitian(matrix: np.ndarray, tolerance: float = HERMITIAN_TOLERANCE, matrix_name: str = None):
    """
    Tests entry-wise Hermiticity |H[i,j] - conj(H[j,i])| <= tolerance.

    :param matrix: a square complex matrix
    :param tolerance: absolute tolerance per entry
    :param matrix_name: a string that gives more information in case of an error.
    :raises ValueError: if the matrix is not Hermitian within tolerance.
    """
    assert_square_matrix(matrix, matrix_name)
    deviation = np.max(np.abs(matrix - np.conj(matrix.T)))
    if deviation > tolerance:
        error_message = f"The matrix {matrix_name} is not Hermitian: maximal deviation {deviation:.3e} exceeds " \
                        f"the tolerance {tolerance:.1e}."
        Logger().critical(error_message)
        raise ValueError(error_message)
