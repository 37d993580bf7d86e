# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from .utils import *
from .log import Logger

from .core.linalg import DensityMatrix, PureState, BipartiteSplit, HermitianAccumulator, tensor_product, \
    partial_trace, herm_eig, gibbs_normalize, trace_inner, fidelity, extreme_eig_projector

from .core.qmmw import QmmwConfig, TrainingTrace, qmmw_loss, update_generator, update_discriminator, run_qmmw, \
    theorem1_bound, empirical_generator_regret, empirical_discriminator_regret, constrain_product, \
    run_entanglement_qmmw, EntanglementVerdict

from .core.circuits import Gate, CircuitLayout, ParameterVector, build_generator_layout, \
    build_discriminator_layout, apply_circuit, generated_state, discriminator_accept_prob, GanProblem, \
    qugan_loss, parameter_shift_gradient

from .core.training import TrainerConfig, GanTrainingTrace, compute_weights, mw_train, baseline_train, \
    run_entanglement_qugan, QuganEntanglementReport

from .core import ExperimentModule, ExperimentResult
from .core.experiment import run_experiment, RunRecord

from .io_handling import load_hdf5, save_hdf5, load_state_file, write_trace_csv, write_summary_json

from .utils.libraries.state_library import STATE_LIBRARY
from .utils.quality_assurance.data_sanity_testing import assert_array_well_defined, assert_equal_dimensions, \
    DimensionMismatchError
