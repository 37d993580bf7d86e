# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from numbers import Real
from typing import Callable, Optional, Tuple, Union
import numpy as np
from qugal.core.linalg import DensityMatrix, HermitianAccumulator, gibbs_normalize, trace_inner, fidelity, \
    as_density_matrix
from qugal.core.qmmw.training_trace import TrainingTrace, TraceEntry
from qugal.log import Logger
from qugal.utils.tags import Tags
from qugal.utils.quality_assurance.data_sanity_testing import assert_equal_dimensions, DimensionMismatchError

logger = Logger()


class QmmwConfig:
    """
    Configuration of a QMMW run.

    :param n_qubits: number of qubits N of the target
    :param rounds: number of rounds T
    :param epsilon: learning rate or "auto" for epsilon_scale * sqrt(N/T), which has to be <= 1/2
    :param generator_sign: sign inside the exponent of the generator update
    :param discriminator_sign: sign inside the exponent of the discriminator update
    :param record_interval: only every record_interval-th round is written to the trace (the last one always)
    :param epsilon_scale: prefactor of the automatic learning rate
    :param audit_regret: keep the iterates and record regret rates
    :param fidelity_squared: fidelity convention of the trace
    """

    def __init__(self, n_qubits: int, rounds: int, epsilon: Union[float, str] = Tags.EPSILON_AUTO,
                 generator_sign: int = -1, discriminator_sign: int = -1, record_interval: int = 1,
                 epsilon_scale: float = 1.0, audit_regret: bool = False, fidelity_squared: bool = True):
        if int(n_qubits) != n_qubits or n_qubits < 1:
            raise ValueError(f"n_qubits has to be a positive integer, but was {n_qubits}.")
        if int(rounds) != rounds or rounds < 1:
            raise ValueError(f"rounds has to be a positive integer, but was {rounds}.")
        if int(record_interval) != record_interval or record_interval < 1:
            raise ValueError(f"record_interval has to be a positive integer, but was {record_interval}.")
        for name, sign in (("generator_sign", generator_sign), ("discriminator_sign", discriminator_sign)):
            if sign not in (-1, 1):
                raise ValueError(f"{name} has to be +1 or -1, but was {sign}.")
        if not isinstance(epsilon_scale, Real) or not epsilon_scale > 0:
            raise ValueError(f"epsilon_scale has to be positive, but was {epsilon_scale}.")

        self.n_qubits = int(n_qubits)
        self.rounds = int(rounds)
        self.generator_sign = int(generator_sign)
        self.discriminator_sign = int(discriminator_sign)
        self.record_interval = int(record_interval)
        self.epsilon_scale = float(epsilon_scale)
        self.audit_regret = bool(audit_regret)
        self.fidelity_squared = bool(fidelity_squared)

        if isinstance(epsilon, str):
            if epsilon != Tags.EPSILON_AUTO:
                raise ValueError(f"epsilon has to be a number or '{Tags.EPSILON_AUTO}', but was '{epsilon}'.")
            self.epsilon = self.epsilon_scale * np.sqrt(self.n_qubits / self.rounds)
            if self.epsilon > 0.5:
                msg = (f"T = {self.rounds} is too small for N = {self.n_qubits}: the automatic learning rate "
                       f"{self.epsilon:.4f} exceeds 1/2.")
                logger.critical(msg)
                raise ValueError(msg)
        else:
            if not np.isfinite(epsilon) or epsilon <= 0:
                raise ValueError(f"epsilon has to be positive and finite, but was {epsilon}.")
            self.epsilon = float(epsilon)
            if self.epsilon > 0.5:
                logger.warning(f"The learning rate {self.epsilon} exceeds 1/2, the convergence guarantee does not "
                               f"apply.")

    def describe(self) -> dict:
        return {"n_qubits": self.n_qubits, "rounds": self.rounds, "epsilon": self.epsilon,
                "epsilon_scale": self.epsilon_scale, "generator_sign": self.generator_sign,
                "discriminator_sign": self.discriminator_sign, "record_interval": self.record_interval,
                "audit_regret": self.audit_regret, "fidelity_squared": self.fidelity_squared}


class QmmwState:
    """
    Unscaled exponent sums and running sums of the QMMW loop after `round` rounds.
    """

    def __init__(self, dim: int):
        self.round = 0
        self.disc_exponent_sum = HermitianAccumulator(dim)
        self.gen_exponent_sum = HermitianAccumulator(dim)
        self.gen_running_sum = HermitianAccumulator(dim)
        self.disc_running_sum = HermitianAccumulator(dim)
        self.loss_sum = 0.0

    @property
    def dim(self) -> int:
        return self.disc_exponent_sum.dim


def theorem1_bound(n_qubits: int, rounds: int) -> float:
    """
    3 sqrt(N/T), the bound on |L(σ̄_G, σ̄_D) - 1/2| after T rounds.
    """
    if n_qubits <= 0 or rounds <= 0:
        raise ValueError(f"n_qubits and rounds have to be positive, got {n_qubits} and {rounds}.")
    return 3 * float(np.sqrt(n_qubits / rounds))


def regret_rate_bounds(n_qubits: int, rounds: int, epsilon: float) -> Tuple[float, float]:
    """
    :return: the bounds (ε²T + N)/(2εT) on the generator and (ε²T + N + 1)/(2εT) on the discriminator regret rate
    """
    return ((epsilon ** 2 * rounds + n_qubits) / (2 * epsilon * rounds),
            (epsilon ** 2 * rounds + n_qubits + 1) / (2 * epsilon * rounds))


def qmmw_loss(sigma_G: DensityMatrix, sigma_D: DensityMatrix, rho: DensityMatrix) -> float:
    """
    L = ½(Tr(σ_D ρ) - Tr(σ_D σ_G)) + ½
    """
    assert_equal_dimensions([as_density_matrix(sigma_G).matrix, as_density_matrix(sigma_D).matrix,
                             as_density_matrix(rho).matrix], ["sigma_G", "sigma_D", "rho"])
    return 0.5 * (trace_inner(sigma_D, rho) - trace_inner(sigma_D, sigma_G)) + 0.5


def update_generator(state: QmmwState, config: QmmwConfig) -> DensityMatrix:
    """
    σ_G^(t) = Gibbs(generator_sign · ε · Σ_{τ≤t} σ_D^(τ))
    """
    return gibbs_normalize(config.generator_sign * config.epsilon * state.disc_exponent_sum.total)


def update_discriminator(state: QmmwState, rho: DensityMatrix, config: QmmwConfig) -> DensityMatrix:
    """
    σ_D^(t+1) = Gibbs(discriminator_sign · ε · Σ_{τ≤t} (ρ - σ_G^(τ))); the empty sum gives I/2^N.
    """
    if state.gen_exponent_sum.dim != rho.dim:
        raise DimensionMismatchError(f"The state has dimension {state.gen_exponent_sum.dim}, rho {rho.dim}.")
    return gibbs_normalize(config.discriminator_sign * config.epsilon * state.gen_exponent_sum.total)


def _closed_form_regret_rates(state: QmmwState, rho: DensityMatrix, config: QmmwConfig) -> Tuple[float, float]:
    """
    Regret rates after state.round rounds from the exponent sums. The comparator sums are linear in the
    comparator, so their extreme values are given by the extreme eigenvalues of the sums.
    """
    t = state.round
    disc_sum = state.disc_exponent_sum.total
    gen_sum = state.gen_exponent_sum.total
    disc_eigenvalues = np.linalg.eigvalsh(disc_sum)
    gen_eigenvalues = np.linalg.eigvalsh(gen_sum)
    offset = 0.5 * trace_inner(disc_sum, rho) + 0.5 * t
    if config.generator_sign > 0:
        generator_regret = state.loss_sum - (offset - 0.5 * disc_eigenvalues[-1])
    else:
        generator_regret = (offset - 0.5 * disc_eigenvalues[0]) - state.loss_sum
    if config.discriminator_sign > 0:
        discriminator_regret = 0.5 * gen_eigenvalues[-1] + 0.5 * t - state.loss_sum
    else:
        discriminator_regret = state.loss_sum - (0.5 * gen_eigenvalues[0] + 0.5 * t)
    return generator_regret / t, discriminator_regret / t


def run_qmmw_loop(rho: DensityMatrix, config: QmmwConfig,
                  constraint: Optional[Callable[[DensityMatrix], DensityMatrix]] = None) \
        -> Tuple[TrainingTrace, DensityMatrix, DensityMatrix]:
    """
    The QMMW rounds. If a constraint is given, every generator iterate is replaced by constraint(σ_G^(t))
    before the loss and the discriminator update use it.
    """
    rho = as_density_matrix(rho)
    if rho.n_qubits != config.n_qubits:
        msg = f"The target has {rho.n_qubits} qubits, the configuration expects {config.n_qubits}."
        logger.critical(msg)
        raise DimensionMismatchError(msg)

    state = QmmwState(rho.dim)
    trace = TrainingTrace(fidelity_squared=config.fidelity_squared)
    if config.audit_regret:
        trace.history = []
    sigma_D = update_discriminator(state, rho, config)

    for t in range(1, config.rounds + 1):
        state.disc_exponent_sum.add(sigma_D)
        state.disc_running_sum.add(sigma_D)
        sigma_G = update_generator(state, config)
        if constraint is not None:
            sigma_G = constraint(sigma_G)

        loss = qmmw_loss(sigma_G, sigma_D, rho)
        state.gen_exponent_sum.add(rho.matrix - sigma_G.matrix)
        state.gen_running_sum.add(sigma_G)
        state.loss_sum += loss
        state.round = t
        if config.audit_regret:
            trace.history.append((sigma_G, sigma_D))

        if t % config.record_interval == 0 or t == config.rounds:
            generator_rate, discriminator_rate = None, None
            if config.audit_regret:
                generator_rate, discriminator_rate = _closed_form_regret_rates(state, rho, config)
            trace.append(TraceEntry(t, loss, fidelity(sigma_G, rho, squared=config.fidelity_squared),
                                    generator_rate, discriminator_rate))
            logger.debug(f"QMMW round {t}/{config.rounds}: loss {loss:.6f}")

        sigma_D = update_discriminator(state, rho, config)

    sigma_G_bar = DensityMatrix(state.gen_running_sum.total / config.rounds)
    sigma_D_bar = DensityMatrix(state.disc_running_sum.total / config.rounds)
    trace.finalize(qmmw_loss(sigma_G_bar, sigma_D_bar, rho),
                   fidelity(sigma_G_bar, rho, squared=config.fidelity_squared))
    return trace, sigma_G_bar, sigma_D_bar


def run_qmmw(rho: DensityMatrix, config: QmmwConfig) -> Tuple[TrainingTrace, DensityMatrix, DensityMatrix]:
    """
    Runs T rounds of QMMW on the target rho.

    :return: the training trace and the averaged states σ̄_G, σ̄_D; trace.final_loss is L(σ̄_G, σ̄_D)
    """
    logger.info(f"Running QMMW on {config.n_qubits} qubits for {config.rounds} rounds...")
    logger.debug(f"QMMW configuration: {config.describe()}")
    trace, sigma_G_bar, sigma_D_bar = run_qmmw_loop(rho, config)
    logger.info(f"Running QMMW on {config.n_qubits} qubits for {config.rounds} rounds...[Done] "
                f"final loss {trace.final_loss:.6f}, fidelity {trace.final_fidelity:.6f}")
    return trace, sigma_G_bar, sigma_D_bar
