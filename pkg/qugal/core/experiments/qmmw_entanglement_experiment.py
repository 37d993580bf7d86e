# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.core import ExperimentModule, ExperimentResult
from qugal.core.experiments.configuration import qmmw_config_from_settings
from qugal.core.experiments.targets import resolve_target, require_pure_target
from qugal.core.linalg import BipartiteSplit
from qugal.core.qmmw import run_entanglement_qmmw, theorem1_bound
from qugal.utils import Tags
from qugal.utils.constants import QmmwDefaults


class QmmwEntanglementExperiment(ExperimentModule):
    """
    Product-constrained QMMW on a pure target. Defaults: target psi-sep, split 2|2, T = 400, ε = sqrt(N/T),
    threshold "auto".
    """

    DEFAULT_TARGET = "psi-sep"

    def run(self) -> ExperimentResult:
        psi = require_pure_target(resolve_target(self.setting(Tags.TARGET_STATE, self.DEFAULT_TARGET)),
                                  Tags.EXPERIMENT_QMMW_ENTANGLEMENT_TEST)
        split = BipartiteSplit.parse(self.setting(Tags.BIPARTITE_SPLIT, QmmwDefaults.ENTANGLEMENT_SPLIT))
        split.check_compatible(psi.n_qubits)
        config = qmmw_config_from_settings(
            self.global_settings, psi.n_qubits,
            epsilon_scale=self.setting(Tags.EPSILON_SCALE, QmmwDefaults.ENTANGLEMENT_EPSILON_SCALE))
        verdict = run_entanglement_qmmw(psi, split, config,
                                        threshold=self.setting(Tags.DECISION_THRESHOLD, Tags.THRESHOLD_AUTO))
        self.logger.info(f"QMMW entanglement verdict for split {split}: {verdict.decision}")

        return ExperimentResult(
            verdict.trace.to_data_frame(), verdict.trace.final_loss, verdict.trace.final_fidelity,
            verdict=verdict.decision,
            bounds={"theorem1_bound": theorem1_bound(config.n_qubits, config.rounds),
                    "threshold": verdict.threshold_used},
            details={"terminal_gap": verdict.terminal_gap, "split": str(split), "epsilon": config.epsilon,
                     "qmmw": config.describe()},
            states={"target": psi.to_density_matrix(), "sigma_G_bar": verdict.sigma_G_bar,
                    "sigma_D_bar": verdict.sigma_D_bar})
