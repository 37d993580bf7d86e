# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import Callable
import numpy as np
from qugal.core.circuits.circuit_layout import ParameterVector
from qugal.utils.constants import PARAMETER_SHIFT, FINITE_DIFFERENCE_STEP


def parameter_shift_gradient(loss_evaluator: Callable[[ParameterVector], float], params: ParameterVector,
                             index: int) -> float:
    """
    (L(θ_i + π/2) - L(θ_i - π/2)) / 2, exact for losses built from rotations exp(-iθP/2) that use each
    parameter once.

    :raises IndexError: if index is out of range
    """
    if not 0 <= index < len(params):
        raise IndexError(f"Parameter index {index} out of range for {len(params)} parameters.")
    return 0.5 * (loss_evaluator(params.shifted(index, PARAMETER_SHIFT)) -
                  loss_evaluator(params.shifted(index, -PARAMETER_SHIFT)))


def finite_difference_gradient(loss_evaluator: Callable[[ParameterVector], float], params: ParameterVector,
                               index: int, step: float = FINITE_DIFFERENCE_STEP) -> float:
    """
    Central difference (L(θ_i + h) - L(θ_i - h)) / 2h.
    """
    if not 0 <= index < len(params):
        raise IndexError(f"Parameter index {index} out of range for {len(params)} parameters.")
    return (loss_evaluator(params.shifted(index, step)) - loss_evaluator(params.shifted(index, -step))) / (2 * step)


def full_gradient(loss_evaluator: Callable[[ParameterVector], float], params: ParameterVector,
                  gradient: Callable = parameter_shift_gradient) -> np.ndarray:
    return np.array([gradient(loss_evaluator, params, _i) for _i in range(len(params))])
