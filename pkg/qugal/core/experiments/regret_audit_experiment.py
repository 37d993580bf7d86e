# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import List
from qugal.core import ExperimentModule, ExperimentResult
from qugal.core.experiments.configuration import qmmw_config_from_settings
from qugal.core.experiments.targets import resolve_target
from qugal.core.linalg import as_density_matrix
from qugal.core.qmmw import run_qmmw, regret_rate_bounds, regret_rates, is_non_increasing_on_average
from qugal.utils import Tags
from qugal.utils.constants import QmmwDefaults

CLOSED_FORM_AGREEMENT_TOLERANCE = 1e-8


def parse_round_counts(text: str) -> List[int]:
    """
    "100,400,1600" -> [100, 400, 1600]
    """
    try:
        counts = sorted({int(_token) for _token in text.split(",") if _token.strip()})
    except ValueError:
        raise ValueError(f"audit_rounds has to be a comma separated list of integers, got '{text}'.") from None
    if not counts or counts[0] < 1:
        raise ValueError(f"audit_rounds needs at least one positive round count, got '{text}'.")
    return counts


class RegretAuditExperiment(ExperimentModule):
    """
    Runs QMMW for several horizons T and checks that the regret rates of both players stay below
    (ε²T + N)/(2εT) and (ε²T + N + 1)/(2εT) and shrink with T. The rates are computed exactly from the
    iterate history and compared with the closed-form rates recorded during the run.
    The trace CSV is the one of the longest horizon.
    """

    DEFAULT_TARGET = "rho-sep-4q"

    def run(self) -> ExperimentResult:
        rho = as_density_matrix(resolve_target(self.setting(Tags.TARGET_STATE, self.DEFAULT_TARGET)))
        horizons = parse_round_counts(self.setting(Tags.AUDIT_ROUNDS, QmmwDefaults.AUDIT_ROUNDS))

        rows = []
        trace, config = None, None
        for rounds in horizons:
            config = qmmw_config_from_settings(self.global_settings, rho.n_qubits, rounds=rounds, audit_regret=True)
            trace, _, _ = run_qmmw(rho, config)
            generator_rate, discriminator_rate = regret_rates(trace.history, rho, config.generator_sign,
                                                              config.discriminator_sign)
            closed_generator, closed_discriminator = trace.last_regret_rates()
            if abs(closed_generator - generator_rate) > CLOSED_FORM_AGREEMENT_TOLERANCE or \
                    abs(closed_discriminator - discriminator_rate) > CLOSED_FORM_AGREEMENT_TOLERANCE:
                self.logger.warning(f"T = {rounds}: the closed-form regret rates ({closed_generator}, "
                                    f"{closed_discriminator}) differ from the exact ones ({generator_rate}, "
                                    f"{discriminator_rate}).")
            generator_bound, discriminator_bound = regret_rate_bounds(config.n_qubits, rounds, config.epsilon)
            rows.append({"rounds": rounds, "epsilon": config.epsilon, "generator_rate": generator_rate,
                         "discriminator_rate": discriminator_rate, "generator_bound": generator_bound,
                         "discriminator_bound": discriminator_bound,
                         "within_bounds": bool(generator_rate <= generator_bound and
                                               discriminator_rate <= discriminator_bound)})
            self.logger.debug(f"Regret audit T = {rounds}: {rows[-1]}")
            # the history is only needed for the exact rates
            trace.history = None

        regret = {
            "horizons": rows,
            "within_bounds": all(_row["within_bounds"] for _row in rows),
            "generator_non_increasing": is_non_increasing_on_average([_r["generator_rate"] for _r in rows]),
            "discriminator_non_increasing": is_non_increasing_on_average(
                [_r["discriminator_rate"] for _r in rows]),
        }
        if not regret["within_bounds"]:
            self.logger.warning("A regret rate exceeds its bound.")
        return ExperimentResult(trace.to_data_frame(), trace.final_loss, trace.final_fidelity, regret=regret,
                                details={"qmmw": config.describe()})
