# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.core.qmmw import QmmwConfig
from qugal.core.training import TrainerConfig
from qugal.utils import Settings, Tags
from qugal.utils.constants import ResolvedConventions, QuganDefaults, QmmwDefaults


def qmmw_config_from_settings(settings: Settings, n_qubits: int, rounds: int = None, epsilon_scale: float = None,
                              audit_regret: bool = None, generator_sign: int = None,
                              discriminator_sign: int = None) -> QmmwConfig:
    """
    Builds the QMMW configuration of an experiment. Explicit arguments override the settings, the settings
    override the resolved conventions.
    """

    def pick(argument, tag, default):
        return argument if argument is not None else settings.get_value_or_default(tag, default)

    return QmmwConfig(n_qubits=n_qubits,
                      rounds=pick(rounds, Tags.ROUNDS, QmmwDefaults.ROUNDS),
                      epsilon=settings.get_value_or_default(Tags.EPSILON, Tags.EPSILON_AUTO),
                      generator_sign=pick(generator_sign, Tags.GENERATOR_SIGN,
                                          ResolvedConventions.QMMW_GENERATOR_SIGN),
                      discriminator_sign=pick(discriminator_sign, Tags.DISCRIMINATOR_SIGN,
                                              ResolvedConventions.QMMW_DISCRIMINATOR_SIGN),
                      record_interval=settings.get_value_or_default(Tags.RECORD_INTERVAL, 1),
                      epsilon_scale=pick(epsilon_scale, Tags.EPSILON_SCALE, ResolvedConventions.QMMW_EPSILON_SCALE),
                      audit_regret=pick(audit_regret, Tags.AUDIT_REGRET, False),
                      fidelity_squared=settings.get_value_or_default(Tags.FIDELITY_SQUARED,
                                                                     ResolvedConventions.QMMW_FIDELITY_SQUARED))


def trainer_config_from_settings(settings: Settings, generator_direction: str = None,
                                 discriminator_direction: str = None, seed: int = None) -> TrainerConfig:

    def pick(argument, tag, default):
        return argument if argument is not None else settings.get_value_or_default(tag, default)

    return TrainerConfig(rounds=settings.get_value_or_default(Tags.ROUNDS, QuganDefaults.ROUNDS),
                         inner_iterations=settings.get_value_or_default(Tags.INNER_ITERATIONS,
                                                                        QuganDefaults.INNER_ITERATIONS),
                         learning_rate=settings.get_value_or_default(Tags.LEARNING_RATE,
                                                                     QuganDefaults.LEARNING_RATE),
                         scale=settings.get_value_or_default(Tags.WEIGHT_SCALE, QuganDefaults.WEIGHT_SCALE),
                         seed=pick(seed, Tags.RANDOM_SEED, 0),
                         init_range=(settings.get_value_or_default(Tags.INIT_RANGE_MIN, QuganDefaults.INIT_RANGE[0]),
                                     settings.get_value_or_default(Tags.INIT_RANGE_MAX, QuganDefaults.INIT_RANGE[1])),
                         generator_direction=pick(generator_direction, Tags.GENERATOR_DIRECTION,
                                                  ResolvedConventions.QUGAN_GENERATOR_DIRECTION),
                         discriminator_direction=pick(discriminator_direction, Tags.DISCRIMINATOR_DIRECTION,
                                                      ResolvedConventions.QUGAN_DISCRIMINATOR_DIRECTION),
                         gradient_method=settings.get_value_or_default(Tags.GRADIENT_METHOD,
                                                                       Tags.GRADIENT_METHOD_PARAMETER_SHIFT),
                         audit_inner=settings.get_value_or_default(Tags.AUDIT_INNER_LOOP, False),
                         fidelity_squared=settings.get_value_or_default(Tags.FIDELITY_SQUARED, True))
