# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT
from abc import abstractmethod

import pandas as pd
from qugal.log import Logger
from qugal.utils import Settings


class ExperimentResult:
    """
    What an experiment module hands back to qugal.core.experiment.run_experiment: the per-round trace and the
    terminal values that go into the summary JSON. `states` holds the density matrices for the HDF5 archive.
    """

    def __init__(self, trace_frame: pd.DataFrame, final_loss: float, final_fidelity: float, verdict: str = None,
                 bounds: dict = None, regret: dict = None, gate_counts: dict = None, details: dict = None,
                 states: dict = None):
        self.trace_frame = trace_frame
        self.final_loss = float(final_loss)
        self.final_fidelity = float(final_fidelity)
        self.verdict = verdict
        self.bounds = bounds
        self.regret = regret
        self.gate_counts = gate_counts
        self.details = details
        self.states = states or {}

    def summary_fields(self) -> dict:
        fields = {"final_loss": self.final_loss, "final_fidelity": self.final_fidelity}
        for key in ("verdict", "bounds", "regret", "gate_counts", "details"):
            if getattr(self, key) is not None:
                fields[key] = getattr(self, key)
        return fields


class ExperimentModule:
    """
    Defines an experiment that is callable via the QuGAL core.experiment.run_experiment method.
    """

    def __init__(self, global_settings: Settings):
        """
         :param global_settings: The QuGAL settings dictionary
         :type global_settings: Settings
        """
        self.logger = Logger()
        self.global_settings = global_settings

    def setting(self, tag: tuple, default):
        return self.global_settings.get_value_or_default(tag, default)

    @abstractmethod
    def run(self) -> ExperimentResult:
        """
        Executes the respective experiment
        """
        pass
