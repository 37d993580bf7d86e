# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
from scipy.linalg import svdvals
from scipy.stats import unitary_group


def _generator(random_state) -> np.random.Generator:
    if isinstance(random_state, np.random.Generator):
        return random_state
    return np.random.default_rng(random_state)


def random_unitary(dim: int, random_state=None) -> np.ndarray:
    """
    :return: a Haar distributed dim x dim unitary matrix
    """
    if dim == 1:
        return np.ones((1, 1), dtype=complex)
    return unitary_group.rvs(dim, random_state=_generator(random_state))


def random_hermitian(dim: int, random_state=None, spectral_radius: float = None) -> np.ndarray:
    """
    Hermitian matrix with standard normal real and imaginary entries, optionally rescaled to the given
    spectral radius.
    """
    rng = _generator(random_state)
    matrix = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    matrix = (matrix + np.conj(matrix.T)) / 2
    if spectral_radius is not None:
        matrix *= spectral_radius / np.max(np.abs(np.linalg.eigvalsh(matrix)))
    return matrix


def random_density_matrix(n_qubits: int, random_state=None, rank: int = None) -> np.ndarray:
    """
    Random mixed state G G† / Tr(G G†) with a complex Gaussian dim x rank matrix G (Hilbert-Schmidt measure for
    full rank).
    """
    rng = _generator(random_state)
    dim = 2 ** n_qubits
    if rank is None:
        rank = dim
    ginibre = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    matrix = ginibre @ np.conj(ginibre.T)
    return matrix / np.real(np.trace(matrix))


def random_state_vector(n_qubits: int, random_state=None) -> np.ndarray:
    rng = _generator(random_state)
    dim = 2 ** n_qubits
    vector = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vector / np.linalg.norm(vector)


def random_product_state_vector(n_a: int, n_b: int, random_state=None) -> np.ndarray:
    """
    |a>⊗|b> with independent random states on the n_a leading and the n_b trailing qubits.
    """
    rng = _generator(random_state)
    return np.kron(random_state_vector(n_a, rng), random_state_vector(n_b, rng))


def schmidt_state_vector(coefficients, n_a: int, n_b: int, random_state=None) -> np.ndarray:
    """
    (U_A⊗U_B) Σ_i c_i |i>|i> for Haar random local unitaries. The coefficients are normalised.
    With random_state=None the local unitaries are the identity.
    """
    coefficients = np.asarray(coefficients, dtype=float)
    dim_a, dim_b = 2 ** n_a, 2 ** n_b
    if len(coefficients) > min(dim_a, dim_b):
        raise ValueError(f"At most {min(dim_a, dim_b)} Schmidt coefficients fit a {n_a}|{n_b} split.")
    coefficients = coefficients / np.linalg.norm(coefficients)
    amplitudes = np.zeros((dim_a, dim_b), dtype=complex)
    for index, coefficient in enumerate(coefficients):
        amplitudes[index, index] = coefficient
    if random_state is not None:
        rng = _generator(random_state)
        amplitudes = random_unitary(dim_a, rng) @ amplitudes @ random_unitary(dim_b, rng).T
    return amplitudes.reshape(-1)


def schmidt_coefficients(amplitudes, n_a: int, n_b: int) -> np.ndarray:
    """
    :return: the Schmidt coefficients of a bipartite pure state in descending order
    """
    return svdvals(np.asarray(amplitudes, dtype=complex).reshape(2 ** n_a, 2 ** n_b))


def ghz_state_vector(n_qubits: int) -> np.ndarray:
    vector = np.zeros(2 ** n_qubits, dtype=complex)
    vector[0] = vector[-1] = 1 / np.sqrt(2)
    return vector
