# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import unittest
import numpy as np
from qugal.utils import random_unitary, random_density_matrix, random_state_vector, random_product_state_vector, \
    schmidt_state_vector, schmidt_coefficients, ghz_state_vector
from qugal.core.linalg import DensityMatrix, PureState


class TestCalculate(unittest.TestCase):

    def test_random_unitary(self):
        unitary = random_unitary(8, 1)
        np.testing.assert_allclose(unitary @ np.conj(unitary.T), np.eye(8), atol=1e-12)
        np.testing.assert_allclose(random_unitary(8, 1), unitary)

    def test_random_density_matrix_is_valid(self):
        rho = DensityMatrix(random_density_matrix(3, 5, rank=2))
        self.assertEqual(rho.n_qubits, 3)
        self.assertEqual(np.sum(np.linalg.eigvalsh(rho.matrix) > 1e-12), 2)

    def test_random_state_vector(self):
        self.assertAlmostEqual(np.linalg.norm(random_state_vector(3, 0)), 1.0, places=14)
        PureState(random_state_vector(3, 0))

    def test_product_state_has_one_schmidt_coefficient(self):
        vector = random_product_state_vector(2, 2, 9)
        coefficients = schmidt_coefficients(vector, 2, 2)
        self.assertAlmostEqual(coefficients[0], 1.0, places=12)
        np.testing.assert_allclose(coefficients[1:], 0, atol=1e-12)

    def test_schmidt_round_trip(self):
        vector = schmidt_state_vector([0.9, 0.3, 0.2], 2, 2, random_state=4)
        coefficients = schmidt_coefficients(vector, 2, 2)
        expected = np.array([0.9, 0.3, 0.2]) / np.linalg.norm([0.9, 0.3, 0.2])
        np.testing.assert_allclose(coefficients[:3], expected, atol=1e-12)
        self.assertAlmostEqual(coefficients[3], 0.0, places=12)

    def test_schmidt_without_local_unitaries(self):
        vector = schmidt_state_vector([1, 1], 1, 1)
        np.testing.assert_allclose(vector, np.array([1, 0, 0, 1]) / np.sqrt(2), atol=1e-15)

    @unittest.expectedFailure
    def test_too_many_coefficients(self):
        schmidt_state_vector([1, 1, 1], 1, 2)

    def test_ghz(self):
        coefficients = schmidt_coefficients(ghz_state_vector(4), 2, 2)
        np.testing.assert_allclose(coefficients[:2], [np.sqrt(0.5), np.sqrt(0.5)], atol=1e-15)
