# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

# First load everything without internal dependencies
from .tags import Tags
from .constants import ResolvedConventions, QuganDefaults, QmmwDefaults

# Then load classes and methods with an <b>increasing</b> amount of internal dependencies.
# The state library depends on qugal.core.linalg and is imported from qugal.utils.libraries.state_library.
from .calculate import random_unitary, random_hermitian, random_density_matrix, random_state_vector, \
    random_product_state_vector, schmidt_state_vector, schmidt_coefficients, ghz_state_vector

from .settings import Settings

from .path_manager import PathManager
