# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.core import ExperimentModule, ExperimentResult
from qugal.core.experiments.configuration import qmmw_config_from_settings
from qugal.core.experiments.targets import resolve_target
from qugal.core.linalg import as_density_matrix, fidelity
from qugal.core.qmmw import run_qmmw, theorem1_bound, regret_rate_bounds
from qugal.utils import Tags


class QmmwApproximationExperiment(ExperimentModule):
    """
    Approximates the target with QMMW and reports the loss of the averaged states, their fidelity in both
    conventions and the convergence bound. Defaults: target rho-sep-4q, T = 400, ε = 2·sqrt(N/T),
    root fidelity in the trace, regret rates recorded.
    """

    DEFAULT_TARGET = "rho-sep-4q"

    def run(self) -> ExperimentResult:
        rho = as_density_matrix(resolve_target(self.setting(Tags.TARGET_STATE, self.DEFAULT_TARGET)))
        config = qmmw_config_from_settings(self.global_settings, rho.n_qubits,
                                           audit_regret=self.setting(Tags.AUDIT_REGRET, True))
        trace, sigma_G_bar, sigma_D_bar = run_qmmw(rho, config)

        bound = theorem1_bound(config.n_qubits, config.rounds)
        generator_bound, discriminator_bound = regret_rate_bounds(config.n_qubits, config.rounds, config.epsilon)
        gap = abs(trace.final_loss - 0.5)
        if gap > bound:
            self.logger.warning(f"The final loss {trace.final_loss:.6f} is further than {bound:.4f} from 1/2.")

        regret = None
        if config.audit_regret:
            generator_rate, discriminator_rate = trace.last_regret_rates()
            regret = {"generator_rate": generator_rate, "discriminator_rate": discriminator_rate,
                      "generator_bound": generator_bound, "discriminator_bound": discriminator_bound}

        return ExperimentResult(
            trace.to_data_frame(), trace.final_loss, trace.final_fidelity,
            bounds={"theorem1_bound": bound, "loss_gap": gap, "within_bound": bool(gap <= bound)},
            regret=regret,
            details={"epsilon": config.epsilon, "qmmw": config.describe(),
                     "fidelity_root": fidelity(sigma_G_bar, rho, squared=False),
                     "fidelity_squared": fidelity(sigma_G_bar, rho, squared=True)},
            states={"target": rho, "sigma_G_bar": sigma_G_bar, "sigma_D_bar": sigma_D_bar})
