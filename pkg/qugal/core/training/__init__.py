# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from .trainer_config import TrainerConfig, direction_sign
from .gan_training_trace import GanTrainingTrace
from .gan_training import compute_weights, mw_train, baseline_train
from .entanglement_test import run_entanglement_qugan, QuganEntanglementReport, analyze_terminal_band, \
    resolve_qugan_threshold, restricted_layouts
