# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import Union
import numpy as np
from qugal.core.circuits.circuit_layout import CircuitLayout, ParameterVector
from qugal.core.circuits.gates import CNOT, rotation_matrices
from qugal.core.linalg import DensityMatrix, PureState, herm_eig, as_density_matrix
from qugal.utils.quality_assurance.data_sanity_testing import DimensionMismatchError


def _apply_single_qubit_gate(tensor: np.ndarray, matrices: np.ndarray, qubit: int) -> np.ndarray:
    moved = np.moveaxis(tensor, qubit + 1, 1)
    rest = moved.shape[2:]
    result = np.matmul(matrices, moved.reshape(moved.shape[0], 2, -1))
    return np.moveaxis(result.reshape((result.shape[0], 2) + rest), 1, qubit + 1)


def _apply_cnot(tensor: np.ndarray, control: int, target: int) -> np.ndarray:
    result = tensor.copy()
    index = [slice(None)] * tensor.ndim
    index[control + 1] = 1
    index = tuple(index)
    # the control axis is dropped in tensor[index]
    target_axis = target + 1 if target < control else target
    result[index] = np.flip(tensor[index], axis=target_axis)
    return result


def _as_parameter_matrix(parameters, n_params: int) -> np.ndarray:
    if isinstance(parameters, ParameterVector):
        parameters = parameters.values
    parameters = np.asarray(parameters, dtype=float)
    if parameters.ndim == 1:
        parameters = parameters[np.newaxis, :]
    if parameters.shape[1] != n_params:
        raise DimensionMismatchError(f"The circuit has {n_params} parameters, but {parameters.shape[1]} were given.")
    return parameters


def simulate_batch(layout: CircuitLayout, parameters, states: np.ndarray) -> np.ndarray:
    """
    Runs a batch of state vectors through the circuit.

    :param parameters: shape (n_params,) or (B, n_params); one parameter set per batch entry or one for all
    :param states: shape (dim,) or (B, dim)
    :return: output amplitudes of shape (B, dim)
    """
    parameter_matrix = _as_parameter_matrix(parameters, layout.n_params)
    states = np.asarray(states, dtype=complex)
    if states.ndim == 1:
        states = states[np.newaxis, :]
    if states.shape[1] != 2 ** layout.n_qubits:
        raise DimensionMismatchError(f"The circuit acts on {layout.n_qubits} qubits, but the states have "
                                     f"dimension {states.shape[1]}.")
    batch = max(states.shape[0], parameter_matrix.shape[0])
    tensor = states.reshape((states.shape[0],) + (2,) * layout.n_qubits)
    for gate in layout.gates:
        if gate.kind == CNOT:
            tensor = _apply_cnot(tensor, gate.control, gate.target)
        else:
            matrices = rotation_matrices(gate.kind, parameter_matrix[:, gate.param_index])
            tensor = _apply_single_qubit_gate(tensor, matrices, gate.target)
    return np.broadcast_to(tensor.reshape(tensor.shape[0], -1), (batch, 2 ** layout.n_qubits)).copy()


def circuit_unitaries(layout: CircuitLayout, parameters, input_columns=None) -> np.ndarray:
    """
    Dense matrices of the circuit for a batch of parameter sets.

    :param input_columns: computational basis inputs to propagate (all by default)
    :return: shape (P, dim, len(input_columns)); column k is U|input_columns[k]>
    """
    parameter_matrix = _as_parameter_matrix(parameters, layout.n_params)
    dim = 2 ** layout.n_qubits
    if input_columns is None:
        input_columns = np.arange(dim)
    basis = np.eye(dim, dtype=complex)[np.asarray(input_columns)]
    n_parameter_sets, n_columns = parameter_matrix.shape[0], basis.shape[0]
    outputs = simulate_batch(layout, np.repeat(parameter_matrix, n_columns, axis=0),
                             np.tile(basis, (n_parameter_sets, 1)))
    return np.transpose(outputs.reshape(n_parameter_sets, n_columns, dim), (0, 2, 1))


def circuit_unitary(layout: CircuitLayout, parameters) -> np.ndarray:
    return circuit_unitaries(layout, parameters)[0]


def apply_circuit(circuit: CircuitLayout, params: ParameterVector, input: PureState) -> PureState:
    """
    Applies the gates of the circuit in order to the input state.

    :raises DimensionMismatchError: if width or parameter count do not match
    """
    if input.n_qubits != circuit.n_qubits:
        raise DimensionMismatchError(f"The circuit acts on {circuit.n_qubits} qubits, the input has "
                                     f"{input.n_qubits}.")
    return PureState(simulate_batch(circuit, params, input.amplitudes)[0])


def generated_amplitudes(layout: CircuitLayout, parameters, n_data: int, n_ancilla: int) -> np.ndarray:
    """
    Output of the circuit on |0...0> for a batch of parameter sets, reshaped to (P, 2^n_data, 2^n_ancilla).
    σ = A A† is the generated state of parameter set p with A = result[p].
    """
    if layout.n_qubits != n_data + n_ancilla:
        raise DimensionMismatchError(f"The generator acts on {layout.n_qubits} qubits, but {n_data} data and "
                                     f"{n_ancilla} ancilla qubits were requested.")
    zero_state = np.zeros(2 ** layout.n_qubits, dtype=complex)
    zero_state[0] = 1
    outputs = simulate_batch(layout, parameters, zero_state)
    return outputs.reshape(outputs.shape[0], 2 ** n_data, 2 ** n_ancilla)


def generated_state(layout: CircuitLayout, theta: ParameterVector, n_data: int, n_ancilla: int) -> DensityMatrix:
    """
    σ_G = Tr_ancilla(U_G |0><0| U_G†); the ancillas are the trailing qubits.
    """
    amplitudes = generated_amplitudes(layout, theta, n_data, n_ancilla)[0]
    return DensityMatrix(amplitudes @ np.conj(amplitudes.T))


def discriminator_accept_prob(layout: CircuitLayout, gamma: ParameterVector,
                              input: Union[DensityMatrix, PureState]) -> float:
    """
    Tr(M_D (input ⊗ |0><0|)) with M_D = U_D† (I ⊗ |0><0|) U_D, i.e. the probability to find the trailing
    ancilla in |0> after the circuit. Mixed inputs are decomposed into their eigenvectors.
    """
    input = as_density_matrix(input)
    if layout.n_qubits != input.n_qubits + 1:
        raise DimensionMismatchError(f"The discriminator acts on {layout.n_qubits} qubits, it needs the "
                                     f"{input.n_qubits} input qubits plus one ancilla.")
    eigenvalues, eigenvectors = herm_eig(input)
    components = eigenvalues > 0
    weights = eigenvalues[components]
    vectors = eigenvectors[:, components].T
    with_ancilla = np.stack([vectors, np.zeros_like(vectors)], axis=-1).reshape(len(weights), -1)
    outputs = simulate_batch(layout, gamma, with_ancilla).reshape(len(weights), -1, 2)
    probabilities = np.sum(np.abs(outputs[:, :, 0]) ** 2, axis=1)
    return float(np.clip(np.dot(weights, probabilities), 0.0, 1.0))
