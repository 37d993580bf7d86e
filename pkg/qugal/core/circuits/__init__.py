# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from .gates import Gate, RX, RY, RZ, CNOT, rotation_matrices
from .circuit_layout import CircuitLayout, ParameterVector, build_generator_layout, build_discriminator_layout
from .state_vector_simulation import apply_circuit, generated_state, discriminator_accept_prob, simulate_batch, \
    circuit_unitary, circuit_unitaries
from .qugan_loss import GanProblem, qugan_loss, QuganLossEvaluator
from .gradients import parameter_shift_gradient, finite_difference_gradient, full_gradient
