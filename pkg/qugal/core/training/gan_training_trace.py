# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
import pandas as pd
from qugal.core.qmmw.training_trace import assert_loss_in_unit_interval
from qugal.utils.tags import Tags


class GanTrainingTrace:
    """
    Per-round record of a QuGAN training run: outer loss and fidelity of the generated state, optionally the
    parameters and the inner losses and weights.
    """

    def __init__(self, fidelity_squared: bool = True):
        self.fidelity_squared = fidelity_squared
        self.rounds = []
        self.losses = []
        self.fidelities = []
        self.theta_snapshots = []
        self.gamma_snapshots = []
        self.inner_losses = []
        self.inner_weights = []
        self.final_loss = None
        self.final_fidelity = None

    def record_round(self, round_index: int, loss: float, fidelity: float, theta=None, gamma=None):
        if self.rounds and round_index <= self.rounds[-1]:
            raise AssertionError(f"Trace rounds have to increase strictly, got {round_index} after "
                                 f"{self.rounds[-1]}.")
        assert_loss_in_unit_interval(loss)
        self.rounds.append(int(round_index))
        self.losses.append(float(loss))
        self.fidelities.append(float(fidelity))
        if theta is not None:
            self.theta_snapshots.append(np.array(theta))
        if gamma is not None:
            self.gamma_snapshots.append(np.array(gamma))

    def record_inner(self, losses, weights):
        for loss in losses:
            assert_loss_in_unit_interval(loss)
        self.inner_losses.append(np.array(losses, dtype=float))
        self.inner_weights.append(np.array(weights, dtype=float))

    def finalize(self, final_loss: float, final_fidelity: float):
        assert_loss_in_unit_interval(final_loss)
        self.final_loss = float(final_loss)
        self.final_fidelity = float(final_fidelity)

    def loss_array(self) -> np.ndarray:
        return np.array(self.losses, dtype=float)

    def fidelity_array(self) -> np.ndarray:
        return np.array(self.fidelities, dtype=float)

    def __len__(self):
        return len(self.rounds)

    def to_data_frame(self) -> pd.DataFrame:
        data_frame = pd.DataFrame({"round": np.array(self.rounds, dtype=int), "loss": self.loss_array(),
                                   "fidelity": self.fidelity_array()})
        data_frame["gen_regret_rate"] = np.nan
        data_frame["disc_regret_rate"] = np.nan
        return data_frame[list(Tags.TRACE_COLUMNS)]
