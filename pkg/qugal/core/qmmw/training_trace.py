# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import NamedTuple, Optional
import numpy as np
import pandas as pd
from qugal.utils.tags import Tags

LOSS_RANGE_TOLERANCE = 1e-9


def assert_loss_in_unit_interval(loss: float):
    if not (-LOSS_RANGE_TOLERANCE <= loss <= 1 + LOSS_RANGE_TOLERANCE) or not np.isfinite(loss):
        raise AssertionError(f"A recorded loss has to lie in [0, 1], but was {loss!r}.")


class TraceEntry(NamedTuple):
    round: int
    loss: float
    fidelity: float
    gen_regret_rate: Optional[float] = None
    disc_regret_rate: Optional[float] = None


class TrainingTrace:
    """
    Per-round record of a QMMW run: the instantaneous game value L(σ_G^(t), σ_D^(t)), the fidelity of the
    iterate σ_G^(t) to the target and, when auditing, both regret rates.
    final_loss and final_fidelity refer to the averaged states.
    """

    def __init__(self, fidelity_squared: bool = True):
        self.entries = []
        self.fidelity_squared = fidelity_squared
        self.final_loss = None
        self.final_fidelity = None
        self.history = None

    def append(self, entry: TraceEntry):
        if self.entries and entry.round <= self.entries[-1].round:
            raise AssertionError(f"Trace rounds have to increase strictly, got {entry.round} after "
                                 f"{self.entries[-1].round}.")
        assert_loss_in_unit_interval(entry.loss)
        self.entries.append(entry)

    def finalize(self, final_loss: float, final_fidelity: float):
        assert_loss_in_unit_interval(final_loss)
        self.final_loss = float(final_loss)
        self.final_fidelity = float(final_fidelity)

    @property
    def rounds(self) -> np.ndarray:
        return np.array([_entry.round for _entry in self.entries], dtype=int)

    @property
    def losses(self) -> np.ndarray:
        return np.array([_entry.loss for _entry in self.entries], dtype=float)

    @property
    def fidelities(self) -> np.ndarray:
        return np.array([_entry.fidelity for _entry in self.entries], dtype=float)

    def last_regret_rates(self):
        """
        :return: (generator rate, discriminator rate) of the last recorded round, None if not audited
        """
        if not self.entries:
            return None, None
        return self.entries[-1].gen_regret_rate, self.entries[-1].disc_regret_rate

    def __len__(self):
        return len(self.entries)

    def to_data_frame(self) -> pd.DataFrame:
        rows = [[_e.round, _e.loss, _e.fidelity,
                 np.nan if _e.gen_regret_rate is None else _e.gen_regret_rate,
                 np.nan if _e.disc_regret_rate is None else _e.disc_regret_rate] for _e in self.entries]
        data_frame = pd.DataFrame(rows, columns=list(Tags.TRACE_COLUMNS))
        data_frame["round"] = data_frame["round"].astype(int)
        return data_frame
