# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import itertools
from qugal.core import ExperimentModule, ExperimentResult
from qugal.core.experiments.configuration import qmmw_config_from_settings, trainer_config_from_settings
from qugal.core.experiments.targets import resolve_target, require_pure_target
from qugal.core.linalg import as_density_matrix, BipartiteSplit
from qugal.core.qmmw import run_qmmw
from qugal.core.training import run_entanglement_qugan
from qugal.utils import Tags
from qugal.utils.constants import QuganDefaults, QmmwDefaults

QMMW_EPSILON_SCALES = (1.0, 2.0)
SIGNS = (+1, -1)
DIRECTIONS = (Tags.DIRECTION_ASCEND, Tags.DIRECTION_DESCEND)


def select_candidate(candidates: list, admissible) -> dict:
    """
    The admissible candidate with the highest final fidelity; the overall best one if none is admissible.
    Ties keep the earlier candidate.
    """
    pool = [_c for _c in candidates if admissible(_c)] or candidates
    return max(pool, key=lambda _c: _c["final_fidelity"])


class SignResolutionExperiment(ExperimentModule):
    """
    Runs every combination of update signs (QMMW) or update directions (QuGAN) on a separable target and picks
    the one that behaves like a working adversarial pair: the loss settles at or above ½ and the generated
    state approaches the target.
    """

    def run(self) -> ExperimentResult:
        algorithm = self.setting(Tags.SIGN_RESOLUTION_ALGORITHM, Tags.ALGORITHM_QMMW)
        if algorithm == Tags.ALGORITHM_QMMW:
            return self.resolve_qmmw_signs()
        if algorithm == Tags.ALGORITHM_QUGAN:
            return self.resolve_qugan_directions()
        msg = f"Unknown algorithm '{algorithm}' for the sign resolution."
        self.logger.critical(msg)
        raise ValueError(msg)

    def resolve_qmmw_signs(self) -> ExperimentResult:
        rho = as_density_matrix(resolve_target(self.setting(Tags.TARGET_STATE, "rho-sep-4q")))
        candidates, traces = [], []
        for epsilon_scale, generator_sign, discriminator_sign in itertools.product(QMMW_EPSILON_SCALES, SIGNS,
                                                                                    SIGNS):
            config = qmmw_config_from_settings(self.global_settings, rho.n_qubits, epsilon_scale=epsilon_scale,
                                               generator_sign=generator_sign,
                                               discriminator_sign=discriminator_sign)
            trace, _, _ = run_qmmw(rho, config)
            candidates.append({"epsilon_scale": epsilon_scale, "generator_sign": generator_sign,
                               "discriminator_sign": discriminator_sign, "final_loss": trace.final_loss,
                               "final_fidelity": trace.final_fidelity})
            traces.append(trace)

        selected = select_candidate(candidates, lambda _c: _c["final_loss"] >= 0.5 - 1e-9)
        trace = traces[candidates.index(selected)]
        self.logger.info(f"Resolved QMMW signs: generator {selected['generator_sign']:+d}, discriminator "
                         f"{selected['discriminator_sign']:+d} (epsilon scale {selected['epsilon_scale']})")
        return ExperimentResult(trace.to_data_frame(), trace.final_loss, trace.final_fidelity,
                                verdict=f"{selected['generator_sign']:+d},{selected['discriminator_sign']:+d}",
                                details={"algorithm": Tags.ALGORITHM_QMMW, "candidates": candidates,
                                         "selected": selected})

    def resolve_qugan_directions(self) -> ExperimentResult:
        psi = require_pure_target(resolve_target(self.setting(Tags.TARGET_STATE, "psi-sep")),
                                  Tags.EXPERIMENT_SIGN_RESOLUTION)
        split = BipartiteSplit.parse(self.setting(Tags.BIPARTITE_SPLIT, QmmwDefaults.ENTANGLEMENT_SPLIT))
        blocks = (self.setting(Tags.GENERATOR_BLOCKS, QuganDefaults.GENERATOR_BLOCKS),
                  self.setting(Tags.DISCRIMINATOR_BLOCKS, QuganDefaults.DISCRIMINATOR_BLOCKS))
        candidates, reports = [], []
        for generator_direction, discriminator_direction in itertools.product(DIRECTIONS, DIRECTIONS):
            trainer = trainer_config_from_settings(self.global_settings, generator_direction=generator_direction,
                                                   discriminator_direction=discriminator_direction)
            report = run_entanglement_qugan(
                psi, split, trainer, blocks=blocks,
                threshold=self.setting(Tags.DECISION_THRESHOLD, Tags.THRESHOLD_AUTO),
                band_fraction=self.setting(Tags.TERMINAL_BAND_FRACTION, QuganDefaults.TERMINAL_BAND_FRACTION))
            candidates.append({"generator_direction": generator_direction,
                               "discriminator_direction": discriminator_direction,
                               "final_loss": report.trace.final_loss, "final_fidelity": report.trace.final_fidelity,
                               "post_burn_in_mean_loss": report.post_burn_in_mean_loss,
                               "decision": report.decision})
            reports.append(report)

        selected = select_candidate(candidates, lambda _c: _c["decision"] == Tags.DECISION_SEPARABLE)
        trace = reports[candidates.index(selected)].trace
        self.logger.info(f"Resolved QuGAN directions: generator {selected['generator_direction']}, "
                         f"discriminator {selected['discriminator_direction']}")
        return ExperimentResult(trace.to_data_frame(), trace.final_loss, trace.final_fidelity,
                                verdict=f"{selected['generator_direction']},{selected['discriminator_direction']}",
                                details={"algorithm": Tags.ALGORITHM_QUGAN, "candidates": candidates,
                                         "selected": selected})
