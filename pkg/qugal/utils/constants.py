# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
from qugal.utils.tags import Tags

HERMITIAN_TOLERANCE = 1e-10
"""
Maximal absolute deviation |H[i,j] - conj(H[j,i])| of a Hermitian matrix.
"""

TRACE_TOLERANCE = 1e-9
"""
Maximal deviation of the trace of a density matrix from one.
"""

PSD_TOLERANCE = 1e-9
"""
Smallest eigenvalue a density matrix may have is -PSD_TOLERANCE.
"""

NORM_TOLERANCE = 1e-10
"""
Maximal deviation of the squared norm of a pure state from one.
"""

ACCUMULATOR_HERMITIAN_TOLERANCE = 1e-9
"""
Relative Hermiticity tolerance of running sums of Hermitian matrices.
"""

IMAGINARY_TRACE_TOLERANCE = 1e-10
"""
Maximal imaginary part of Tr(AB) for Hermitian A, B, relative to max(1, |A|_F |B|_F).
"""

STATE_FILE_NORMALIZATION_TOLERANCE = 1e-6
"""
State files whose norm or trace deviates by more than this are rejected; smaller deviations are renormalized.
"""

PARAMETER_SHIFT = np.pi / 2
FINITE_DIFFERENCE_STEP = 1e-5


class ResolvedConventions:
    """
    Sign and direction conventions selected by the sign-resolution experiment.
    The library defaults follow the printed update rules; the experiments use these values.
    """
    QMMW_GENERATOR_SIGN = +1
    QMMW_DISCRIMINATOR_SIGN = +1
    QMMW_EPSILON_SCALE = 2.0
    QMMW_FIDELITY_SQUARED = False
    QUGAN_GENERATOR_DIRECTION = Tags.DIRECTION_DESCEND
    QUGAN_DISCRIMINATOR_DIRECTION = Tags.DIRECTION_ASCEND


class QuganDefaults:
    """
    Default hyper-parameters of the QuGAN trainers and entanglement test.
    """
    ROUNDS = 500
    INNER_ITERATIONS = 3
    LEARNING_RATE = 0.3
    WEIGHT_SCALE = 0.9
    INIT_RANGE = (0.0, 2 * np.pi)
    GENERATOR_BLOCKS = 7
    DISCRIMINATOR_BLOCKS = 3
    DECISION_THRESHOLD = 0.1
    TERMINAL_BAND_FRACTION = 0.4


class QmmwDefaults:
    """
    Default settings of the QMMW experiments.
    """
    ROUNDS = 400
    ENTANGLEMENT_SPLIT = "2|2"
    AUDIT_ROUNDS = "100,400,1600"
    ENTANGLEMENT_EPSILON_SCALE = 1.0
    THEOREM_THRESHOLD_MARGIN = 0.05
