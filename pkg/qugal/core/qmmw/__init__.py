# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from .training_trace import TrainingTrace, TraceEntry, assert_loss_in_unit_interval
from .qmmw_algorithm import QmmwConfig, QmmwState, qmmw_loss, update_generator, update_discriminator, run_qmmw, \
    run_qmmw_loop, theorem1_bound, regret_rate_bounds
from .regret import empirical_generator_regret, empirical_discriminator_regret, regret_rates, \
    is_non_increasing_on_average
from .entanglement_test import constrain_product, run_entanglement_qmmw, EntanglementVerdict, \
    resolve_qmmw_threshold
