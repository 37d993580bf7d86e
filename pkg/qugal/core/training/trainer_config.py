# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import Tuple
import numpy as np
from qugal.log import Logger
from qugal.utils.constants import QuganDefaults
from qugal.utils.tags import Tags

logger = Logger()


def direction_sign(direction: str) -> int:
    if direction == Tags.DIRECTION_ASCEND:
        return +1
    if direction == Tags.DIRECTION_DESCEND:
        return -1
    raise ValueError(f"A direction has to be '{Tags.DIRECTION_ASCEND}' or '{Tags.DIRECTION_DESCEND}', "
                     f"but was '{direction}'.")


class TrainerConfig:
    """
    Hyper-parameters of the QuGAN trainers.

    :param rounds: outer rounds T
    :param inner_iterations: virtual inner iterations K
    :param learning_rate: step size α (α = 0 freezes the parameters)
    :param scale: η in (0, 1]; the weights of a round sum to η. η = 1 is accepted with a warning.
    :param seed: seed of the uniform parameter initialisation
    :param init_range: interval (low, high) of the uniform initialisation
    :param generator_direction: "ascend" or "descend"
    :param discriminator_direction: "ascend" or "descend"
    :param gradient_method: "parameter_shift" or "finite_difference"
    :param record_parameters: keep a copy of θ and γ for every round
    :param audit_inner: keep the inner losses and weights of every round
    :param fidelity_squared: fidelity convention of the trace
    """

    def __init__(self, rounds: int = QuganDefaults.ROUNDS, inner_iterations: int = QuganDefaults.INNER_ITERATIONS,
                 learning_rate: float = QuganDefaults.LEARNING_RATE, scale: float = QuganDefaults.WEIGHT_SCALE,
                 seed: int = 0, init_range: Tuple[float, float] = QuganDefaults.INIT_RANGE,
                 generator_direction: str = Tags.DIRECTION_ASCEND,
                 discriminator_direction: str = Tags.DIRECTION_DESCEND,
                 gradient_method: str = Tags.GRADIENT_METHOD_PARAMETER_SHIFT, record_parameters: bool = False,
                 audit_inner: bool = False, fidelity_squared: bool = True):
        if int(rounds) != rounds or rounds < 1:
            raise ValueError(f"rounds has to be at least 1, but was {rounds}.")
        if int(inner_iterations) != inner_iterations or inner_iterations < 1:
            raise ValueError(f"inner_iterations has to be at least 1, but was {inner_iterations}.")
        if not np.isfinite(learning_rate) or learning_rate < 0:
            raise ValueError(f"learning_rate has to be non-negative, but was {learning_rate}.")
        if not 0 < scale <= 1:
            raise ValueError(f"scale has to lie in (0, 1], but was {scale}.")
        if scale == 1:
            logger.warning("scale = 1: the multiplicative weight update reduces to plain gradient steps for K = 1.")
        if int(seed) != seed or not 0 <= seed < 2 ** 64:
            raise ValueError(f"seed has to be a 64-bit unsigned integer, but was {seed}.")
        low, high = (float(_v) for _v in init_range)
        if not (np.isfinite(low) and np.isfinite(high) and low < high):
            raise ValueError(f"init_range has to be a finite interval (low, high), but was {init_range}.")
        if gradient_method not in (Tags.GRADIENT_METHOD_PARAMETER_SHIFT, Tags.GRADIENT_METHOD_FINITE_DIFFERENCE):
            raise ValueError(f"Unknown gradient method '{gradient_method}'.")

        self.rounds = int(rounds)
        self.inner_iterations = int(inner_iterations)
        self.learning_rate = float(learning_rate)
        self.scale = float(scale)
        self.seed = int(seed)
        self.init_range = (low, high)
        self.generator_sign = direction_sign(generator_direction)
        self.discriminator_sign = direction_sign(discriminator_direction)
        self.generator_direction = generator_direction
        self.discriminator_direction = discriminator_direction
        self.gradient_method = gradient_method
        self.record_parameters = bool(record_parameters)
        self.audit_inner = bool(audit_inner)
        self.fidelity_squared = bool(fidelity_squared)

    def initial_parameters(self, n_generator_params: int, n_discriminator_params: int):
        """
        θ is drawn before γ from one generator seeded with `seed`.
        """
        rng = np.random.default_rng(self.seed)
        low, high = self.init_range
        theta = rng.uniform(low, high, n_generator_params)
        gamma = rng.uniform(low, high, n_discriminator_params)
        return theta, gamma

    def describe(self) -> dict:
        return {"rounds": self.rounds, "inner_iterations": self.inner_iterations,
                "learning_rate": self.learning_rate, "scale": self.scale, "seed": self.seed,
                "init_range": list(self.init_range), "generator_direction": self.generator_direction,
                "discriminator_direction": self.discriminator_direction, "gradient_method": self.gradient_method}
