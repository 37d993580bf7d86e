# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import re
import numpy as np
from qugal.utils.serializer import SerializableQuGALClass
from qugal.utils.constants import TRACE_TOLERANCE, PSD_TOLERANCE, NORM_TOLERANCE, ACCUMULATOR_HERMITIAN_TOLERANCE
from qugal.utils.quality_assurance.data_sanity_testing import assert_array_well_defined, assert_hermitian, \
    assert_square_matrix, DimensionMismatchError
from qugal.log import Logger


def number_of_qubits(dimension: int) -> int:
    """
    :param dimension: a Hilbert space dimension
    :return: n such that dimension = 2^n
    :raises DimensionMismatchError: if the dimension is not a power of two
    """
    if dimension < 1 or (dimension & (dimension - 1)) != 0:
        error_message = f"The dimension {dimension} is not a power of two."
        Logger().critical(error_message)
        raise DimensionMismatchError(error_message)
    return int(dimension).bit_length() - 1


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class DensityMatrix(SerializableQuGALClass):
    """
    A Hermitian, positive semidefinite, unit trace matrix of dimension 2^n_qubits.
    The matrix is copied, symmetrised and frozen on construction.
    """

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=complex)
        assert_square_matrix(matrix, "density matrix")
        self.n_qubits = number_of_qubits(matrix.shape[0])
        assert_array_well_defined(matrix, array_name="density matrix")
        assert_hermitian(matrix, matrix_name="density matrix")
        matrix = (matrix + np.conj(matrix.T)) / 2

        trace = np.real(np.trace(matrix))
        if abs(trace - 1) > TRACE_TOLERANCE:
            error_message = f"The trace of a density matrix has to be one, but was {trace!r}."
            Logger().critical(error_message)
            raise ValueError(error_message)
        smallest_eigenvalue = np.linalg.eigvalsh(matrix)[0]
        if smallest_eigenvalue < -PSD_TOLERANCE:
            error_message = f"A density matrix has to be positive semidefinite, but has the eigenvalue " \
                            f"{smallest_eigenvalue!r}."
            Logger().critical(error_message)
            raise ValueError(error_message)
        self._matrix = _read_only(matrix)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def purity(self) -> float:
        return float(np.real(np.einsum("ij,ji->", self._matrix, self._matrix)))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self._matrix)

    @staticmethod
    def maximally_mixed(n_qubits: int):
        dim = 2 ** n_qubits
        return DensityMatrix(np.eye(dim) / dim)

    @staticmethod
    def from_pure_state(state):
        amplitudes = state.amplitudes if isinstance(state, PureState) else np.asarray(state, dtype=complex)
        return DensityMatrix(np.outer(amplitudes, np.conj(amplitudes)))

    def __repr__(self):
        return f"DensityMatrix(n_qubits={self.n_qubits})"

    def serialize(self) -> dict:
        return {"DensityMatrix": {"n_qubits": self.n_qubits, "matrix": np.array(self._matrix)}}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        return DensityMatrix(dictionary_to_deserialize["matrix"])


class PureState(SerializableQuGALClass):
    """
    A normalised state vector of length 2^n_qubits. Qubit 0 is the most significant tensor factor.
    """

    def __init__(self, amplitudes):
        amplitudes = np.array(amplitudes, dtype=complex)
        if amplitudes.ndim != 1:
            raise DimensionMismatchError(f"Amplitudes have to be a vector, but have shape {amplitudes.shape}.")
        self.n_qubits = number_of_qubits(len(amplitudes))
        assert_array_well_defined(amplitudes, array_name="amplitudes")
        squared_norm = float(np.real(np.vdot(amplitudes, amplitudes)))
        if abs(squared_norm - 1) > NORM_TOLERANCE:
            error_message = f"A pure state has to be normalised, but its squared norm is {squared_norm!r}."
            Logger().critical(error_message)
            raise ValueError(error_message)
        self._amplitudes = _read_only(amplitudes)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def dim(self) -> int:
        return len(self._amplitudes)

    def to_density_matrix(self) -> DensityMatrix:
        return DensityMatrix.from_pure_state(self)

    def overlap(self, other) -> complex:
        """
        :return: <self|other>
        """
        return complex(np.vdot(self._amplitudes, other.amplitudes))

    @staticmethod
    def basis_state(n_qubits: int, index: int = 0):
        amplitudes = np.zeros(2 ** n_qubits, dtype=complex)
        amplitudes[index] = 1
        return PureState(amplitudes)

    @staticmethod
    def normalized(amplitudes):
        """
        Creates a PureState from an unnormalised, non-zero vector.
        """
        amplitudes = np.asarray(amplitudes, dtype=complex)
        norm = np.linalg.norm(amplitudes)
        if norm == 0:
            raise ValueError("The zero vector cannot be normalised.")
        return PureState(amplitudes / norm)

    def __repr__(self):
        return f"PureState(n_qubits={self.n_qubits})"

    def serialize(self) -> dict:
        return {"PureState": {"n_qubits": self.n_qubits, "amplitudes": np.array(self._amplitudes)}}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        return PureState(dictionary_to_deserialize["amplitudes"])


class BipartiteSplit:
    """
    Bipartition A|B of a register of n_a + n_b qubits; A holds the leading qubits.
    """

    def __init__(self, n_a: int, n_b: int):
        if int(n_a) != n_a or int(n_b) != n_b or n_a < 1 or n_b < 1:
            raise ValueError(f"Both parts of a bipartite split need at least one qubit, got {n_a}|{n_b}.")
        self.n_a = int(n_a)
        self.n_b = int(n_b)

    @property
    def n_qubits(self) -> int:
        return self.n_a + self.n_b

    @property
    def dims(self) -> list:
        return [self.n_a, self.n_b]

    def check_compatible(self, n_qubits: int):
        """
        :raises DimensionMismatchError: if the split does not cover exactly n_qubits qubits
        """
        if self.n_qubits != n_qubits:
            raise DimensionMismatchError(f"The split {self} covers {self.n_qubits} qubits, but the state has "
                                         f"{n_qubits}.")

    @staticmethod
    def parse(text: str):
        """
        Parses "n_a|n_b" or "n_a,n_b".
        """
        match = re.fullmatch(r"\s*(\d+)\s*[|,]\s*(\d+)\s*", str(text))
        if match is None:
            raise ValueError(f"Cannot parse the bipartite split '{text}', expected the form 'n_a|n_b'.")
        return BipartiteSplit(int(match.group(1)), int(match.group(2)))

    def __eq__(self, other):
        return isinstance(other, BipartiteSplit) and (self.n_a, self.n_b) == (other.n_a, other.n_b)

    def __hash__(self):
        return hash((self.n_a, self.n_b))

    def __str__(self):
        return f"{self.n_a}|{self.n_b}"

    def __repr__(self):
        return f"BipartiteSplit({self.n_a}, {self.n_b})"


class HermitianAccumulator:
    """
    Running sum of Hermitian matrices of a fixed dimension, e.g. the exponent sums of the Gibbs updates.
    The sum is stored unscaled.
    """

    def __init__(self, dim: int):
        self.dim = int(dim)
        self.count = 0
        self._total = np.zeros((self.dim, self.dim), dtype=complex)

    def add(self, hermitian_matrix):
        if isinstance(hermitian_matrix, DensityMatrix):
            hermitian_matrix = hermitian_matrix.matrix
        hermitian_matrix = np.asarray(hermitian_matrix, dtype=complex)
        if hermitian_matrix.shape != self._total.shape:
            raise DimensionMismatchError(f"Cannot add a matrix of shape {hermitian_matrix.shape} to an accumulator "
                                         f"of dimension {self.dim}.")
        candidate = self._total + hermitian_matrix
        scale = max(1.0, float(np.max(np.abs(candidate))))
        assert_hermitian(candidate, tolerance=ACCUMULATOR_HERMITIAN_TOLERANCE * scale, matrix_name="accumulated sum")
        self._total = candidate
        self.count += 1
        return self

    @property
    def total(self) -> np.ndarray:
        return _read_only(self._total.copy())

    def trace(self) -> float:
        return float(np.real(np.trace(self._total)))
