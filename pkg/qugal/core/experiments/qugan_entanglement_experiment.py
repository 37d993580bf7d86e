# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.core import ExperimentModule, ExperimentResult
from qugal.core.experiments.configuration import trainer_config_from_settings
from qugal.core.experiments.targets import resolve_target, require_pure_target
from qugal.core.linalg import BipartiteSplit
from qugal.core.training import run_entanglement_qugan
from qugal.utils import Tags
from qugal.utils.constants import QuganDefaults, QmmwDefaults


class QuganEntanglementExperiment(ExperimentModule):
    """
    QuGAN with a generator that has no CNOT across the bipartition. Defaults: target ghz-4q, split 2|2, T = 500,
    L1 = 7, L2 = 3, K = 3, α = 0.3, η = 0.9, generator descends and discriminator ascends.
    """

    DEFAULT_TARGET = "ghz-4q"

    def run(self) -> ExperimentResult:
        psi = require_pure_target(resolve_target(self.setting(Tags.TARGET_STATE, self.DEFAULT_TARGET)),
                                  Tags.EXPERIMENT_QUGAN_ENTANGLEMENT_TEST)
        split = BipartiteSplit.parse(self.setting(Tags.BIPARTITE_SPLIT, QmmwDefaults.ENTANGLEMENT_SPLIT))
        trainer = trainer_config_from_settings(self.global_settings)
        blocks = (self.setting(Tags.GENERATOR_BLOCKS, QuganDefaults.GENERATOR_BLOCKS),
                  self.setting(Tags.DISCRIMINATOR_BLOCKS, QuganDefaults.DISCRIMINATOR_BLOCKS))
        report = run_entanglement_qugan(
            psi, split, trainer, blocks=blocks,
            threshold=self.setting(Tags.DECISION_THRESHOLD, Tags.THRESHOLD_AUTO),
            band_fraction=self.setting(Tags.TERMINAL_BAND_FRACTION, QuganDefaults.TERMINAL_BAND_FRACTION),
            training_method=self.setting(Tags.TRAINING_METHOD, Tags.TRAINING_METHOD_MULTIPLICATIVE_WEIGHTS))
        self.logger.info(f"QuGAN entanglement verdict for split {split}: {report.decision}")

        details = report.summary()
        details.update({"split": str(split), "blocks": list(blocks), "trainer": trainer.describe()})
        return ExperimentResult(
            report.trace.to_data_frame(), report.trace.final_loss, report.trace.final_fidelity,
            verdict=report.decision,
            bounds={"threshold": report.threshold},
            gate_counts=report.gate_counts,
            details=details,
            states={"target": psi.to_density_matrix(), "sigma_G": report.generated_state})
