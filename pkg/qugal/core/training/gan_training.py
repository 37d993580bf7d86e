# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import Tuple
import numpy as np
from qugal.core.circuits import CircuitLayout, ParameterVector, GanProblem, QuganLossEvaluator
from qugal.core.linalg import fidelity
from qugal.core.training.gan_training_trace import GanTrainingTrace
from qugal.core.training.trainer_config import TrainerConfig
from qugal.log import Logger

logger = Logger()

WEIGHT_SUM_TOLERANCE = 1e-9
PROGRESS_LOG_INTERVAL = 50


def compute_weights(inner_losses, eta: float) -> np.ndarray:
    """
    w_k = η L_k / Σ_k L_k. If all losses vanish the weights are uniform, η/K.

    :raises ValueError: for an empty or negative loss vector
    """
    inner_losses = np.asarray(inner_losses, dtype=float)
    if inner_losses.ndim != 1 or len(inner_losses) == 0:
        raise ValueError("At least one inner loss is needed to compute weights.")
    if np.any(inner_losses < 0):
        raise ValueError(f"Inner losses cannot be negative, got {inner_losses}.")
    total = np.sum(inner_losses)
    if total == 0:
        logger.warning("All inner losses vanish, using uniform weights.")
        return np.full(len(inner_losses), eta / len(inner_losses))
    return eta * inner_losses / total


def _non_negative(losses: list) -> np.ndarray:
    # removes rounding dust below zero
    losses = np.asarray(losses, dtype=float)
    return np.where((losses < 0) & (losses > -1e-12), 0.0, losses)


def _record_outer_round(trace: GanTrainingTrace, evaluator: QuganLossEvaluator, round_index: int,
                        theta: np.ndarray, gamma: np.ndarray, config: TrainerConfig) -> float:
    loss = evaluator.loss(theta, gamma)
    state_fidelity = fidelity(evaluator.generated_state(theta), evaluator.problem.target,
                              squared=config.fidelity_squared)
    if config.record_parameters:
        trace.record_round(round_index, loss, state_fidelity, theta, gamma)
    else:
        trace.record_round(round_index, loss, state_fidelity)
    if round_index % PROGRESS_LOG_INTERVAL == 0:
        logger.debug(f"QuGAN round {round_index}/{config.rounds}: loss {loss:.6f}, fidelity {state_fidelity:.6f}")
    return loss


def _finalize(trace: GanTrainingTrace, evaluator: QuganLossEvaluator, theta: np.ndarray, gamma: np.ndarray,
              config: TrainerConfig):
    trace.finalize(evaluator.loss(theta, gamma),
                   fidelity(evaluator.generated_state(theta), evaluator.problem.target,
                            squared=config.fidelity_squared))


def mw_train(problem: GanProblem, gen_layout: CircuitLayout, disc_layout: CircuitLayout, config: TrainerConfig) \
        -> Tuple[ParameterVector, ParameterVector, GanTrainingTrace]:
    """
    The multiplicative weight training method.

    Every outer round runs K virtual gradient steps from the current parameters, recording the loss and the
    generator gradient at every virtual point. The generator then moves along the loss weighted combination of
    the recorded gradients, the discriminator along its gradient at the outer point.
    """
    evaluator = QuganLossEvaluator(problem, gen_layout, disc_layout, config.gradient_method)
    theta, gamma = config.initial_parameters(gen_layout.n_params, disc_layout.n_params)
    trace = GanTrainingTrace(fidelity_squared=config.fidelity_squared)
    step_G = config.generator_sign * config.learning_rate
    step_D = config.discriminator_sign * config.learning_rate

    logger.info(f"Running multiplicative weight training for {config.rounds} rounds...")
    logger.debug(f"Trainer configuration: {config.describe()}")
    for t in range(1, config.rounds + 1):
        outer_loss = _record_outer_round(trace, evaluator, t, theta, gamma, config)

        virtual_theta, virtual_gamma = theta, gamma
        inner_losses, inner_gradients = [], []
        outer_gamma_gradient = None
        for k in range(config.inner_iterations):
            inner_losses.append(outer_loss if k == 0 else evaluator.loss(virtual_theta, virtual_gamma))
            theta_gradient = evaluator.generator_gradient(virtual_theta, virtual_gamma)
            gamma_gradient = evaluator.discriminator_gradient(virtual_theta, virtual_gamma)
            if k == 0:
                outer_gamma_gradient = gamma_gradient
            inner_gradients.append(theta_gradient)
            virtual_theta = virtual_theta + step_G * theta_gradient
            virtual_gamma = virtual_gamma + step_D * gamma_gradient

        weights = compute_weights(_non_negative(inner_losses), config.scale)
        if abs(np.sum(weights) - config.scale) > WEIGHT_SUM_TOLERANCE:
            raise AssertionError(f"The weights {weights} do not sum to {config.scale}.")
        if config.audit_inner:
            trace.record_inner(_non_negative(inner_losses), weights)

        weighted_gradient = np.tensordot(weights, np.array(inner_gradients), axes=1)
        theta = theta + step_G * weighted_gradient
        gamma = gamma + step_D * outer_gamma_gradient

    _finalize(trace, evaluator, theta, gamma, config)
    logger.info(f"Running multiplicative weight training for {config.rounds} rounds...[Done] "
                f"final loss {trace.final_loss:.6f}, fidelity {trace.final_fidelity:.6f}")
    return ParameterVector(theta), ParameterVector(gamma), trace


def baseline_train(problem: GanProblem, gen_layout: CircuitLayout, disc_layout: CircuitLayout,
                   config: TrainerConfig) -> Tuple[ParameterVector, ParameterVector, GanTrainingTrace]:
    """
    Plain simultaneous gradient steps of both players at the current parameters, without inner loop or weights.
    inner_iterations and scale are ignored.
    """
    evaluator = QuganLossEvaluator(problem, gen_layout, disc_layout, config.gradient_method)
    theta, gamma = config.initial_parameters(gen_layout.n_params, disc_layout.n_params)
    trace = GanTrainingTrace(fidelity_squared=config.fidelity_squared)
    step_G = config.generator_sign * config.learning_rate
    step_D = config.discriminator_sign * config.learning_rate

    logger.info(f"Running baseline gradient training for {config.rounds} rounds...")
    for t in range(1, config.rounds + 1):
        _record_outer_round(trace, evaluator, t, theta, gamma, config)
        theta_gradient = evaluator.generator_gradient(theta, gamma)
        gamma_gradient = evaluator.discriminator_gradient(theta, gamma)
        theta = theta + step_G * theta_gradient
        gamma = gamma + step_D * gamma_gradient

    _finalize(trace, evaluator, theta, gamma, config)
    logger.info(f"Running baseline gradient training for {config.rounds} rounds...[Done] "
                f"final loss {trace.final_loss:.6f}")
    return ParameterVector(theta), ParameterVector(gamma), trace
