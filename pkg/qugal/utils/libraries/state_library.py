# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
from qugal.core.linalg.quantum_states import DensityMatrix, PureState
from qugal.utils.calculate import ghz_state_vector


class StateLibrary(object):
    """
    Named target states of the reproduction experiments.
    The presets are available by name through `get` so that they can be referenced in configuration files.
    """

    def rho_sep_4q(self) -> DensityMatrix:
        """
        ½|0000><0000| + ½|1111><1111|
        """
        matrix = np.zeros((16, 16), dtype=complex)
        matrix[0, 0] = matrix[15, 15] = 0.5
        return DensityMatrix(matrix)

    def psi_sep(self) -> PureState:
        """
        (|00> + |10>)⊗|00> / √2
        """
        amplitudes = np.zeros(16, dtype=complex)
        amplitudes[0b0000] = amplitudes[0b1000] = 1 / np.sqrt(2)
        return PureState(amplitudes)

    def ghz_4q(self) -> PureState:
        """
        (|0000> + |1111>) / √2
        """
        return PureState(ghz_state_vector(4))

    def zero_4q(self) -> PureState:
        """
        |0000>
        """
        return PureState.basis_state(4)

    def maximally_mixed_1q(self) -> DensityMatrix:
        """
        I/2 on a single qubit
        """
        return DensityMatrix.maximally_mixed(1)

    def names(self) -> list:
        return sorted(self._presets().keys())

    def describe(self, name: str) -> str:
        return " ".join(self._presets()[name].__doc__.split()) if self._presets()[name].__doc__ else name

    def get(self, name: str):
        """
        :param name: the preset name, e.g. "rho-sep-4q"
        :raises KeyError: if there is no preset of that name
        """
        presets = self._presets()
        if name not in presets:
            raise KeyError(f"Unknown state preset '{name}'. Available presets: {', '.join(self.names())}")
        return presets[name]()

    def _presets(self) -> dict:
        return {
            "rho-sep-4q": self.rho_sep_4q,
            "psi-sep": self.psi_sep,
            "ghz-4q": self.ghz_4q,
            "zero-4q": self.zero_4q,
            "mixed-1q": self.maximally_mixed_1q,
        }


STATE_LIBRARY = StateLibrary()
