# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import Tuple, Union
import numpy as np
from scipy.linalg import eigh
from qugal.core.linalg.quantum_states import DensityMatrix, PureState
from qugal.utils.constants import IMAGINARY_TRACE_TOLERANCE
from qugal.utils.quality_assurance.data_sanity_testing import assert_array_well_defined, assert_hermitian, \
    assert_square_matrix, assert_equal_dimensions, DimensionMismatchError

MatrixLike = Union[np.ndarray, DensityMatrix]


def as_matrix(operand) -> np.ndarray:
    """
    Unwraps DensityMatrix and PureState instances to their matrix representation.
    """
    if isinstance(operand, DensityMatrix):
        return operand.matrix
    if isinstance(operand, PureState):
        return operand.to_density_matrix().matrix
    return np.asarray(operand, dtype=complex)


def as_density_matrix(state) -> DensityMatrix:
    if isinstance(state, DensityMatrix):
        return state
    if isinstance(state, PureState):
        return state.to_density_matrix()
    return DensityMatrix(state)


def tensor_product(a: MatrixLike, b: MatrixLike):
    """
    Kronecker product (A⊗B)[i*dim(b)+k, j*dim(b)+l] = A[i,j]*B[k,l].
    Returns a DensityMatrix if both factors are density matrices and a plain matrix otherwise.
    """
    matrix_a = as_matrix(a)
    matrix_b = as_matrix(b)
    assert_square_matrix(matrix_a, "a")
    assert_square_matrix(matrix_b, "b")
    assert_array_well_defined(matrix_a, array_name="a")
    assert_array_well_defined(matrix_b, array_name="b")
    product = np.kron(matrix_a, matrix_b)
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(product)
    return product


def partial_trace_matrix(matrix: np.ndarray, dims: list, keep: int) -> np.ndarray:
    """
    Traces out every subsystem except `keep`. Subsystems are ordered left to right in tensor order and dims holds
    their qubit counts.
    """
    matrix = np.asarray(matrix, dtype=complex)
    total_qubits = sum(dims)
    if matrix.shape != (2 ** total_qubits, 2 ** total_qubits):
        raise DimensionMismatchError(f"The subsystems {dims} describe {total_qubits} qubits, but the matrix has "
                                     f"shape {matrix.shape}.")
    if not 0 <= keep < len(dims):
        raise DimensionMismatchError(f"Cannot keep subsystem {keep} of {len(dims)} subsystems.")
    sizes = [2 ** _d for _d in dims]
    tensor = matrix.reshape(sizes + sizes)
    remaining = len(sizes)
    for index in reversed(range(len(sizes))):
        if index == keep:
            continue
        tensor = np.trace(tensor, axis1=index, axis2=index + remaining)
        remaining -= 1
    return tensor.reshape(sizes[keep], sizes[keep])


def partial_trace(rho: DensityMatrix, dims: list, keep: int) -> DensityMatrix:
    """
    Reduced density matrix of the subsystem `keep`.

    :param rho: a density matrix on sum(dims) qubits
    :param dims: qubit counts of the subsystems in tensor order
    :param keep: index of the subsystem that is kept
    :raises DimensionMismatchError: if dims do not add up to rho.n_qubits
    """
    rho = as_density_matrix(rho)
    if sum(dims) != rho.n_qubits:
        raise DimensionMismatchError(f"The subsystems {dims} do not add up to the {rho.n_qubits} qubits of rho.")
    return DensityMatrix(partial_trace_matrix(rho.matrix, dims, keep))


def herm_eig(h: MatrixLike) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigendecomposition h = V diag(λ) V† of a Hermitian matrix with ascending eigenvalues.

    :raises ValueError: if h is not Hermitian
    """
    matrix = as_matrix(h)
    assert_array_well_defined(matrix, array_name="h")
    assert_hermitian(matrix, matrix_name="h")
    eigenvalues, eigenvectors = eigh((matrix + np.conj(matrix.T)) / 2)
    return eigenvalues, eigenvectors


def gibbs_normalize(h: MatrixLike) -> DensityMatrix:
    """
    exp(h)/Tr(exp(h)) of a Hermitian matrix. The spectrum is shifted by its maximum before exponentiation.
    """
    eigenvalues, eigenvectors = herm_eig(h)
    weights = np.exp(eigenvalues - eigenvalues[-1])
    weights /= np.sum(weights)
    return DensityMatrix((eigenvectors * weights) @ np.conj(eigenvectors.T))


def trace_inner(a: MatrixLike, b: MatrixLike) -> float:
    """
    Real part of Tr(a·b) for Hermitian a, b.

    :raises DimensionMismatchError: if the dimensions differ
    :raises AssertionError: if the imaginary part is not negligible
    """
    matrix_a = as_matrix(a)
    matrix_b = as_matrix(b)
    assert_equal_dimensions([matrix_a, matrix_b], ["a", "b"])
    value = np.einsum("ij,ji->", matrix_a, matrix_b)
    scale = max(1.0, float(np.linalg.norm(matrix_a) * np.linalg.norm(matrix_b)))
    if abs(value.imag) > IMAGINARY_TRACE_TOLERANCE * scale:
        raise AssertionError(f"Tr(ab) of Hermitian operands has the imaginary part {value.imag!r}.")
    return float(value.real)


def _psd_square_root(matrix: np.ndarray) -> np.ndarray:
    eigenvalues, eigenvectors = eigh(matrix)
    eigenvalues = np.clip(eigenvalues, 0, None)
    return (eigenvectors * np.sqrt(eigenvalues)) @ np.conj(eigenvectors.T)


def _pure_projection(matrix: np.ndarray):
    eigenvalues, eigenvectors = eigh(matrix)
    if eigenvalues[-1] >= 1 - 1e-10:
        return eigenvectors[:, -1]
    return None


def fidelity(rho, sigma, squared: bool = True) -> float:
    """
    Uhlmann fidelity F(ρ,σ) = (Tr √(√ρ σ √ρ))², clamped to [0, 1]. If one argument is pure, F = <ψ|σ|ψ>.

    :param squared: if False, the root fidelity √F is returned
    """
    matrix_rho = as_density_matrix(rho).matrix
    matrix_sigma = as_density_matrix(sigma).matrix
    assert_equal_dimensions([matrix_rho, matrix_sigma], ["rho", "sigma"])

    value = None
    for pure_candidate, other in ((matrix_rho, matrix_sigma), (matrix_sigma, matrix_rho)):
        vector = _pure_projection(pure_candidate)
        if vector is not None:
            value = float(np.real(np.vdot(vector, other @ vector)))
            break
    if value is None:
        root_rho = _psd_square_root(matrix_rho)
        product = root_rho @ matrix_sigma @ root_rho
        eigenvalues = np.linalg.eigvalsh((product + np.conj(product.T)) / 2)
        eigenvalues[eigenvalues < 1e-13 * max(eigenvalues[-1], 1e-300)] = 0
        value = float(np.sum(np.sqrt(eigenvalues)) ** 2)

    value = min(max(value, 0.0), 1.0)
    return value if squared else float(np.sqrt(value))


def extreme_eig_projector(h: MatrixLike, which: str) -> DensityMatrix:
    """
    Rank-1 projector onto the eigenvector of the smallest ("min") or largest ("max") eigenvalue of h.
    A degenerate extreme eigenvalue resolves to the lowest eigenvector index.
    """
    if which not in ("min", "max"):
        raise ValueError(f"which has to be 'min' or 'max', but was '{which}'.")
    eigenvalues, eigenvectors = herm_eig(h)
    tolerance = 1e-12 * max(1.0, float(np.max(np.abs(eigenvalues))))
    if which == "min":
        index = 0
    else:
        index = int(np.flatnonzero(eigenvalues >= eigenvalues[-1] - tolerance)[0])
    vector = eigenvectors[:, index]
    return DensityMatrix(np.outer(vector, np.conj(vector)))
