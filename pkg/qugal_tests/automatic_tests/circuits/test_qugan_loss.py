# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import unittest
import numpy as np
from qugal.core.circuits import GanProblem, QuganLossEvaluator, ParameterVector, qugan_loss, \
    build_generator_layout, build_discriminator_layout, parameter_shift_gradient, finite_difference_gradient, \
    full_gradient
from qugal.core.linalg import DensityMatrix, PureState
from qugal.utils import random_density_matrix, random_state_vector
from qugal.utils.quality_assurance import DimensionMismatchError
from qugal_tests.test_utils.problems import single_rotation_problem, single_rotation_loss


class TestGanProblem(unittest.TestCase):

    def test_defaults(self):
        problem = GanProblem(PureState.basis_state(2))
        self.assertEqual(problem.n_qubits, 2)
        self.assertEqual((problem.prior_generated, problem.prior_real), (0.5, 0.5))

    @unittest.expectedFailure
    def test_pure_target_with_ancilla(self):
        GanProblem(PureState.basis_state(2), n_ancilla_gen=1)

    @unittest.expectedFailure
    def test_too_many_ancillas(self):
        GanProblem(DensityMatrix.maximally_mixed(1), n_ancilla_gen=2)

    @unittest.expectedFailure
    def test_invalid_priors(self):
        GanProblem(PureState.basis_state(1), priors=(0.6, 0.6))

    def test_layout_mismatch(self):
        problem = GanProblem(PureState.basis_state(2))
        with self.assertRaises(DimensionMismatchError):
            problem.check_layouts(build_generator_layout(3, 0, 1), build_discriminator_layout(2, 1))
        with self.assertRaises(DimensionMismatchError):
            problem.check_layouts(build_generator_layout(2, 0, 1), build_discriminator_layout(3, 1))


class TestQuganLoss(unittest.TestCase):

    def setUp(self):
        self.problem = GanProblem(PureState(random_state_vector(2, 17)))
        self.gen_layout = build_generator_layout(2, 0, 2)
        self.disc_layout = build_discriminator_layout(2, 2)
        rng = np.random.default_rng(18)
        self.theta = rng.uniform(0, 2 * np.pi, self.gen_layout.n_params)
        self.gamma = rng.uniform(0, 2 * np.pi, self.disc_layout.n_params)
        self.evaluator = QuganLossEvaluator(self.problem, self.gen_layout, self.disc_layout)

    def reference_loss(self, theta, gamma):
        return qugan_loss(self.gen_layout, ParameterVector(theta), self.disc_layout, ParameterVector(gamma),
                          self.problem)

    def test_single_rotation_loss(self):
        problem, gen_layout, disc_layout = single_rotation_problem()
        evaluator = QuganLossEvaluator(problem, gen_layout, disc_layout)
        for theta in (0.0, 0.4, np.pi / 2, 2.0, np.pi):
            self.assertAlmostEqual(evaluator.loss([theta], []), single_rotation_loss(theta), places=14)
            self.assertAlmostEqual(qugan_loss(gen_layout, ParameterVector([theta]), disc_layout, ParameterVector([]),
                                              problem), single_rotation_loss(theta), places=14)

    def test_evaluator_matches_reference(self):
        self.assertAlmostEqual(self.evaluator.loss(self.theta, self.gamma),
                               self.reference_loss(self.theta, self.gamma), places=12)

    def test_loss_in_unit_interval(self):
        value = self.evaluator.loss(self.theta, self.gamma)
        self.assertGreaterEqual(value, 0)
        self.assertLessEqual(value, 1)

    def test_perfect_generator_gives_one_half(self):
        problem, gen_layout, disc_layout = single_rotation_problem()
        self.assertAlmostEqual(QuganLossEvaluator(problem, gen_layout, disc_layout).loss([0.0], []), 0.5,
                               places=15)

    def test_priors(self):
        problem = GanProblem(PureState.basis_state(2), priors=(0.2, 0.8))
        evaluator = QuganLossEvaluator(problem, self.gen_layout, self.disc_layout)
        measurement = evaluator.measurement_operators(self.gamma[np.newaxis, :])[0]
        sigma_G = evaluator.generated_state(self.theta).matrix
        expected = 0.8 * np.real(measurement[0, 0]) + 0.2 * (1 - np.real(np.trace(measurement @ sigma_G)))
        self.assertAlmostEqual(evaluator.loss(self.theta, self.gamma), expected, places=12)

    def test_mixed_target_with_ancilla(self):
        problem = GanProblem(DensityMatrix(random_density_matrix(1, 3)), n_ancilla_gen=1)
        gen_layout = build_generator_layout(1, 1, 2)
        disc_layout = build_discriminator_layout(1, 2)
        evaluator = QuganLossEvaluator(problem, gen_layout, disc_layout)
        theta = np.linspace(0.1, 1.1, gen_layout.n_params)
        gamma = np.linspace(0.2, 1.7, disc_layout.n_params)
        reference = qugan_loss(gen_layout, ParameterVector(theta), disc_layout, ParameterVector(gamma), problem)
        self.assertAlmostEqual(evaluator.loss(theta, gamma), reference, places=12)

    def test_measurement_operator_is_effect(self):
        measurement = self.evaluator.measurement_operators(self.gamma[np.newaxis, :])[0]
        eigenvalues = np.linalg.eigvalsh(measurement)
        self.assertGreaterEqual(eigenvalues[0], -1e-12)
        self.assertLessEqual(eigenvalues[-1], 1 + 1e-12)

    @unittest.expectedFailure
    def test_unknown_gradient_method(self):
        QuganLossEvaluator(self.problem, self.gen_layout, self.disc_layout, gradient_method="adjoint")


class TestGradients(unittest.TestCase):

    def setUp(self):
        self.problem = GanProblem(PureState(random_state_vector(2, 27)))
        self.gen_layout = build_generator_layout(2, 0, 1)
        self.disc_layout = build_discriminator_layout(2, 1)
        rng = np.random.default_rng(28)
        self.theta = ParameterVector(rng.uniform(0, 2 * np.pi, self.gen_layout.n_params))
        self.gamma = ParameterVector(rng.uniform(0, 2 * np.pi, self.disc_layout.n_params))
        self.evaluator = QuganLossEvaluator(self.problem, self.gen_layout, self.disc_layout)

    def generator_loss(self, theta: ParameterVector) -> float:
        return qugan_loss(self.gen_layout, theta, self.disc_layout, self.gamma, self.problem)

    def discriminator_loss(self, gamma: ParameterVector) -> float:
        return qugan_loss(self.gen_layout, self.theta, self.disc_layout, gamma, self.problem)

    def test_single_rotation_gradient(self):
        problem, gen_layout, disc_layout = single_rotation_problem()
        evaluator = QuganLossEvaluator(problem, gen_layout, disc_layout)
        # d/dθ (½ + ½ sin²(θ/2)) = sin(θ)/4
        for theta in (0.3, 1.2, 2.9):
            self.assertAlmostEqual(evaluator.generator_gradient([theta], [])[0], np.sin(theta) / 4, places=14)
        self.assertEqual(len(evaluator.discriminator_gradient([0.3], [])), 0)

    def test_parameter_shift_matches_finite_differences(self):
        shift = full_gradient(self.generator_loss, self.theta, parameter_shift_gradient)
        difference = full_gradient(self.generator_loss, self.theta, finite_difference_gradient)
        np.testing.assert_allclose(shift, difference, atol=1e-7)
        shift = full_gradient(self.discriminator_loss, self.gamma, parameter_shift_gradient)
        difference = full_gradient(self.discriminator_loss, self.gamma, finite_difference_gradient)
        np.testing.assert_allclose(shift, difference, atol=1e-7)

    def test_vectorised_gradients_match_reference(self):
        np.testing.assert_allclose(self.evaluator.generator_gradient(self.theta.values, self.gamma.values),
                                   full_gradient(self.generator_loss, self.theta), atol=1e-12)
        np.testing.assert_allclose(self.evaluator.discriminator_gradient(self.theta.values, self.gamma.values),
                                   full_gradient(self.discriminator_loss, self.gamma), atol=1e-12)

    def test_finite_difference_evaluator(self):
        evaluator = QuganLossEvaluator(self.problem, self.gen_layout, self.disc_layout,
                                       gradient_method="finite_difference")
        np.testing.assert_allclose(evaluator.generator_gradient(self.theta.values, self.gamma.values),
                                   self.evaluator.generator_gradient(self.theta.values, self.gamma.values), atol=1e-7)

    def test_parameter_shift_on_random_instances(self):
        finite_differences = QuganLossEvaluator(self.problem, self.gen_layout, self.disc_layout,
                                                gradient_method="finite_difference")
        rng = np.random.default_rng(29)
        for _ in range(100):
            theta = rng.uniform(0, 2 * np.pi, self.gen_layout.n_params)
            gamma = rng.uniform(0, 2 * np.pi, self.disc_layout.n_params)
            np.testing.assert_allclose(self.evaluator.generator_gradient(theta, gamma),
                                       finite_differences.generator_gradient(theta, gamma), atol=1e-6)
            np.testing.assert_allclose(self.evaluator.discriminator_gradient(theta, gamma),
                                       finite_differences.discriminator_gradient(theta, gamma), atol=1e-6)

    @unittest.expectedFailure
    def test_index_out_of_range(self):
        parameter_shift_gradient(self.generator_loss, self.theta, len(self.theta))
