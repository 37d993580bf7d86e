# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from .quantum_states import DensityMatrix, PureState, BipartiteSplit, HermitianAccumulator, number_of_qubits
from .matrix_functions import tensor_product, partial_trace, partial_trace_matrix, herm_eig, gibbs_normalize, \
    trace_inner, fidelity, extreme_eig_projector, as_matrix, as_density_matrix
