# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
from qugal.core.circuits import CircuitLayout, Gate, GanProblem, RX, CNOT
from qugal.core.linalg import PureState, DensityMatrix
from qugal.utils import random_product_state_vector, schmidt_state_vector, schmidt_coefficients


def single_rotation_problem():
    """
    Generator RX(θ)|0>, discriminator copying the data qubit onto its ancilla (no parameters), target |0>.
    The loss is ½ + ½ sin²(θ/2).
    """
    gen_layout = CircuitLayout(1, [Gate(RX, 0, param_index=0)])
    disc_layout = CircuitLayout(2, [Gate(CNOT, 1, control=0)])
    return GanProblem(PureState.basis_state(1)), gen_layout, disc_layout


def single_rotation_loss(theta: float) -> float:
    return 0.5 + 0.5 * np.sin(theta / 2) ** 2


def assert_density_matrix_close(test_case, a: DensityMatrix, b: DensityMatrix, tolerance: float):
    test_case.assertLessEqual(float(np.max(np.abs(a.matrix - b.matrix))), tolerance)


def random_entanglement_instances(instances: int, seed: int = 4711):
    """
    Random pure states on a 2|2 split: product states, and states of Schmidt rank 2 to 4 whose largest Schmidt
    coefficient is at most 0.9.

    :return: (product_states, entangled_states), two lists of PureState of length instances
    """
    rng = np.random.default_rng(seed)
    product_states = [PureState(random_product_state_vector(2, 2, rng)) for _ in range(instances)]
    entangled_states = []
    while len(entangled_states) < instances:
        coefficients = rng.uniform(0.1, 1.0, rng.integers(2, 5))
        vector = schmidt_state_vector(coefficients, 2, 2, random_state=rng)
        if schmidt_coefficients(vector, 2, 2)[0] <= 0.9:
            entangled_states.append(PureState(vector))
    return product_states, entangled_states
