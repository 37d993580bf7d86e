# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import unittest
import numpy as np
from qugal.core.circuits import CircuitLayout, ParameterVector, Gate, RX, RY, RZ, CNOT, rotation_matrices, \
    build_generator_layout, build_discriminator_layout, apply_circuit, generated_state, \
    discriminator_accept_prob, simulate_batch, circuit_unitary
from qugal.core.linalg import DensityMatrix, PureState, BipartiteSplit, fidelity
from qugal.core.qmmw import constrain_product
from qugal.utils import ghz_state_vector, random_density_matrix
from qugal.utils.quality_assurance import DimensionMismatchError
from qugal_tests.test_utils.problems import assert_density_matrix_close

CNOT_MATRIX = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


class TestRotations(unittest.TestCase):

    def test_rotations_are_exponentials(self):
        pauli = {RX: np.array([[0, 1], [1, 0]]), RY: np.array([[0, -1j], [1j, 0]]), RZ: np.diag([1, -1])}
        for kind, matrix in pauli.items():
            angle = 0.731
            expected = np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * matrix
            np.testing.assert_allclose(rotation_matrices(kind, [angle])[0], expected, atol=1e-15)

    @unittest.expectedFailure
    def test_cnot_is_no_rotation(self):
        rotation_matrices(CNOT, [0.1])


class TestSimulation(unittest.TestCase):

    def test_cnot_unitary(self):
        layout = CircuitLayout(2, [Gate(CNOT, 1, control=0)])
        np.testing.assert_allclose(circuit_unitary(layout, []), CNOT_MATRIX, atol=1e-15)

    def test_reversed_cnot_unitary(self):
        layout = CircuitLayout(2, [Gate(CNOT, 0, control=1)])
        swap = np.eye(4)[[0, 2, 1, 3]]
        np.testing.assert_allclose(circuit_unitary(layout, []), swap @ CNOT_MATRIX @ swap, atol=1e-15)

    def test_block_unitary_matches_kronecker_products(self):
        layout = build_generator_layout(2, 0, 1)
        theta = np.random.default_rng(5).uniform(0, 2 * np.pi, layout.n_params)

        def local(offset):
            rx, ry, rz = (rotation_matrices(_k, [theta[offset + _i]])[0] for _i, _k in enumerate((RX, RY, RZ)))
            return rz @ ry @ rx

        expected = CNOT_MATRIX @ np.kron(np.eye(2), local(3)) @ np.kron(local(0), np.eye(2))
        np.testing.assert_allclose(circuit_unitary(layout, theta), expected, atol=1e-13)

    def test_unitarity(self):
        layout = build_discriminator_layout(3, 2)
        unitary = circuit_unitary(layout, np.random.default_rng(1).uniform(0, 2 * np.pi, layout.n_params))
        np.testing.assert_allclose(np.conj(unitary.T) @ unitary, np.eye(16), atol=1e-12)

    def test_batch_matches_single_runs(self):
        layout = build_generator_layout(3, 0, 2)
        parameters = np.random.default_rng(2).uniform(0, 2 * np.pi, (4, layout.n_params))
        zero = np.zeros(8)
        zero[0] = 1
        batch = simulate_batch(layout, parameters, zero)
        for row in range(4):
            single = apply_circuit(layout, ParameterVector(parameters[row]), PureState(zero))
            np.testing.assert_allclose(batch[row], single.amplitudes, atol=1e-14)

    def test_apply_rx(self):
        layout = CircuitLayout(1, [Gate(RX, 0, param_index=0)])
        output = apply_circuit(layout, ParameterVector([np.pi]), PureState.basis_state(1))
        self.assertAlmostEqual(abs(output.amplitudes[1]), 1.0, places=14)

    def test_parameter_count_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            simulate_batch(build_generator_layout(1, 0, 1), [0.1], np.array([1, 0]))

    def test_width_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            apply_circuit(CircuitLayout(2, [Gate(CNOT, 1, control=0)]), ParameterVector([]),
                          PureState.basis_state(1))


class TestGeneratedStates(unittest.TestCase):

    def test_pure_generator_output(self):
        layout = build_generator_layout(2, 0, 2)
        sigma = generated_state(layout, ParameterVector(np.linspace(0.1, 2.0, layout.n_params)), 2, 0)
        self.assertAlmostEqual(sigma.purity(), 1.0, places=12)

    def test_ancilla_gives_mixed_output(self):
        layout = build_generator_layout(1, 1, 2)
        sigma = generated_state(layout, ParameterVector(np.linspace(0.3, 2.5, layout.n_params)), 1, 1)
        self.assertEqual(sigma.n_qubits, 1)
        self.assertLess(sigma.purity(), 1.0 - 1e-6)

    def test_restricted_generator_output_is_product(self):
        split = BipartiteSplit(2, 2)
        layout = build_generator_layout(4, 0, 3, split)
        rng = np.random.default_rng(7)
        for _ in range(100):
            sigma = generated_state(layout, ParameterVector(rng.uniform(0, 2 * np.pi, layout.n_params)), 4, 0)
            assert_density_matrix_close(self, constrain_product(sigma, split), sigma, 1e-10)
            self.assertAlmostEqual(fidelity(sigma, constrain_product(sigma, split)), 1.0, delta=1e-9)
            self.assertLessEqual(fidelity(sigma, PureState(ghz_state_vector(4))), 0.5 + 1e-12)

    def test_unrestricted_generator_reaches_entangled_states(self):
        layout = build_generator_layout(2, 0, 1)
        theta = np.zeros(layout.n_params)
        theta[1] = np.pi / 2
        sigma = generated_state(layout, ParameterVector(theta), 2, 0)
        bell = PureState(np.array([1, 0, 0, 1]) / np.sqrt(2))
        self.assertAlmostEqual(fidelity(sigma, bell), 1.0, places=12)


class TestDiscriminator(unittest.TestCase):

    def test_copying_discriminator(self):
        layout = CircuitLayout(2, [Gate(CNOT, 1, control=0)])
        self.assertAlmostEqual(discriminator_accept_prob(layout, ParameterVector([]), PureState.basis_state(1)), 1.0)
        self.assertAlmostEqual(discriminator_accept_prob(layout, ParameterVector([]),
                                                         DensityMatrix(np.diag([0.3, 0.7]))), 0.3, places=14)

    def test_accept_prob_is_linear(self):
        layout = build_discriminator_layout(2, 2)
        gamma = ParameterVector(np.random.default_rng(3).uniform(0, 2 * np.pi, layout.n_params))
        rho = DensityMatrix(random_density_matrix(2, 4))
        sigma = DensityMatrix(random_density_matrix(2, 5))
        mixture = DensityMatrix(0.25 * rho.matrix + 0.75 * sigma.matrix)
        expected = 0.25 * discriminator_accept_prob(layout, gamma, rho) + \
            0.75 * discriminator_accept_prob(layout, gamma, sigma)
        self.assertAlmostEqual(discriminator_accept_prob(layout, gamma, mixture), expected, places=12)

    def test_missing_ancilla(self):
        with self.assertRaises(DimensionMismatchError):
            discriminator_accept_prob(build_discriminator_layout(2, 1), ParameterVector(np.zeros(9)),
                                      PureState.basis_state(3))
