# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import Tuple, Union
import numpy as np
from qugal.core.circuits.circuit_layout import CircuitLayout, ParameterVector
from qugal.core.circuits.state_vector_simulation import generated_state, generated_amplitudes, \
    discriminator_accept_prob, circuit_unitaries
from qugal.core.linalg import DensityMatrix, PureState, as_density_matrix
from qugal.utils.constants import PARAMETER_SHIFT, FINITE_DIFFERENCE_STEP
from qugal.utils.tags import Tags
from qugal.utils.quality_assurance.data_sanity_testing import DimensionMismatchError


class GanProblem:
    """
    Target ρ on N qubits, number of generator ancillas N_a and the priors (P(G), P(R)).
    """

    def __init__(self, target: Union[DensityMatrix, PureState], n_ancilla_gen: int = 0,
                 priors: Tuple[float, float] = (0.5, 0.5)):
        self.target = as_density_matrix(target)
        if int(n_ancilla_gen) != n_ancilla_gen or not 0 <= n_ancilla_gen <= self.target.n_qubits:
            raise DimensionMismatchError(f"The number of generator ancillas has to lie in [0, N] = "
                                         f"[0, {self.target.n_qubits}], got {n_ancilla_gen}.")
        if n_ancilla_gen > 0 and self.target.purity() > 1 - 1e-9:
            raise ValueError("Pure targets are generated without ancilla qubits.")
        prior_generated, prior_real = (float(_p) for _p in priors)
        if not (0 <= prior_generated <= 1 and 0 <= prior_real <= 1) or abs(prior_generated + prior_real - 1) > 1e-12:
            raise ValueError(f"The priors (P(G), P(R)) have to be probabilities summing to one, got {priors}.")
        self.n_ancilla_gen = int(n_ancilla_gen)
        self.prior_generated = prior_generated
        self.prior_real = prior_real

    @property
    def n_qubits(self) -> int:
        return self.target.n_qubits

    def check_layouts(self, gen_layout: CircuitLayout, disc_layout: CircuitLayout):
        if gen_layout.n_qubits != self.n_qubits + self.n_ancilla_gen:
            raise DimensionMismatchError(f"The generator acts on {gen_layout.n_qubits} qubits, the problem needs "
                                         f"{self.n_qubits} + {self.n_ancilla_gen}.")
        if disc_layout.n_qubits != self.n_qubits + 1:
            raise DimensionMismatchError(f"The discriminator acts on {disc_layout.n_qubits} qubits, the problem "
                                         f"needs {self.n_qubits} + 1.")


def qugan_loss(gen_layout: CircuitLayout, theta: ParameterVector, disc_layout: CircuitLayout,
               gamma: ParameterVector, problem: GanProblem) -> float:
    """
    L = P(R) Tr(M_D (ρ⊗|0><0|)) + P(G) (1 - Tr(M_D (σ_G⊗|0><0|)))
    """
    problem.check_layouts(gen_layout, disc_layout)
    sigma_G = generated_state(gen_layout, theta, problem.n_qubits, problem.n_ancilla_gen)
    return problem.prior_real * discriminator_accept_prob(disc_layout, gamma, problem.target) + \
        problem.prior_generated * (1 - discriminator_accept_prob(disc_layout, gamma, sigma_G))


def _shift_matrix(values: np.ndarray, shift: float) -> np.ndarray:
    n_params = len(values)
    offsets = np.concatenate([np.eye(n_params), -np.eye(n_params)]) * shift
    return values[np.newaxis, :] + offsets


class QuganLossEvaluator:
    """
    Vectorised evaluation of the QuGAN loss and of both parameter gradients.
    The discriminator enters only through the effective measurement operator on the data qubits,
    M = W†W with W = (I⊗<0|) U_D (I⊗|0>); all shifted parameter sets of one gradient are simulated together.
    """

    def __init__(self, problem: GanProblem, gen_layout: CircuitLayout, disc_layout: CircuitLayout,
                 gradient_method: str = Tags.GRADIENT_METHOD_PARAMETER_SHIFT):
        problem.check_layouts(gen_layout, disc_layout)
        if gradient_method not in (Tags.GRADIENT_METHOD_PARAMETER_SHIFT, Tags.GRADIENT_METHOD_FINITE_DIFFERENCE):
            raise ValueError(f"Unknown gradient method '{gradient_method}'.")
        self.problem = problem
        self.gen_layout = gen_layout
        self.disc_layout = disc_layout
        self.gradient_method = gradient_method
        self._rho = problem.target.matrix
        self._data_dim = 2 ** problem.n_qubits

    def _shift_and_scale(self) -> Tuple[float, float]:
        if self.gradient_method == Tags.GRADIENT_METHOD_PARAMETER_SHIFT:
            return PARAMETER_SHIFT, 0.5
        return FINITE_DIFFERENCE_STEP, 0.5 / FINITE_DIFFERENCE_STEP

    def measurement_operators(self, gamma_matrix) -> np.ndarray:
        """
        :return: M for every row of gamma_matrix, shape (P, 2^N, 2^N)
        """
        inputs_with_ancilla_zero = 2 * np.arange(self._data_dim)
        unitaries = circuit_unitaries(self.disc_layout, gamma_matrix, inputs_with_ancilla_zero)
        reduced = unitaries[:, 0::2, :]
        return np.einsum("pji,pjk->pik", np.conj(reduced), reduced)

    def generated_amplitudes(self, theta_matrix) -> np.ndarray:
        return generated_amplitudes(self.gen_layout, theta_matrix, self.problem.n_qubits, self.problem.n_ancilla_gen)

    def _losses(self, accept_real: np.ndarray, accept_generated: np.ndarray) -> np.ndarray:
        return self.problem.prior_real * accept_real + self.problem.prior_generated * (1 - accept_generated)

    def loss(self, theta, gamma) -> float:
        measurement = self.measurement_operators(np.asarray(gamma, dtype=float))[0]
        amplitudes = self.generated_amplitudes(np.asarray(theta, dtype=float))[0]
        accept_real = np.real(np.einsum("ij,ji->", measurement, self._rho))
        accept_generated = np.real(np.einsum("bc,ci,bi->", measurement, amplitudes, np.conj(amplitudes)))
        return float(self._losses(accept_real, accept_generated))

    def generator_gradient(self, theta, gamma) -> np.ndarray:
        theta = np.asarray(theta, dtype=float)
        if len(theta) == 0:
            return np.zeros(0)
        shift, scale = self._shift_and_scale()
        measurement = self.measurement_operators(np.asarray(gamma, dtype=float))[0]
        amplitudes = self.generated_amplitudes(_shift_matrix(theta, shift))
        accept_real = np.real(np.einsum("ij,ji->", measurement, self._rho))
        accept_generated = np.real(np.einsum("bc,pci,pbi->p", measurement, amplitudes, np.conj(amplitudes)))
        losses = self._losses(accept_real, accept_generated)
        return scale * (losses[:len(theta)] - losses[len(theta):])

    def discriminator_gradient(self, theta, gamma) -> np.ndarray:
        gamma = np.asarray(gamma, dtype=float)
        if len(gamma) == 0:
            return np.zeros(0)
        shift, scale = self._shift_and_scale()
        amplitudes = self.generated_amplitudes(np.asarray(theta, dtype=float))[0]
        sigma_G = amplitudes @ np.conj(amplitudes.T)
        measurements = self.measurement_operators(_shift_matrix(gamma, shift))
        accept_real = np.real(np.einsum("pij,ji->p", measurements, self._rho))
        accept_generated = np.real(np.einsum("pij,ji->p", measurements, sigma_G))
        losses = self._losses(accept_real, accept_generated)
        return scale * (losses[:len(gamma)] - losses[len(gamma):])

    def generated_state(self, theta) -> DensityMatrix:
        return generated_state(self.gen_layout, np.asarray(theta, dtype=float), self.problem.n_qubits,
                               self.problem.n_ancilla_gen)
