# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from .data_sanity_testing import DimensionMismatchError, assert_equal_dimensions, assert_array_well_defined, \
    assert_hermitian, assert_square_matrix
