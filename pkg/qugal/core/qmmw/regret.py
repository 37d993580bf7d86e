# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import List, Tuple
import numpy as np
from qugal.core.linalg import DensityMatrix, extreme_eig_projector, as_density_matrix
from qugal.core.qmmw.qmmw_algorithm import qmmw_loss

History = List[Tuple[DensityMatrix, DensityMatrix]]


def _check_history(history: History):
    if len(history) == 0:
        raise ValueError("The regret of an empty history is undefined.")


def empirical_generator_regret(history: History, rho: DensityMatrix, generator_sign: int = +1) -> float:
    """
    Exact regret of the generator over a history of (σ_G^(t), σ_D^(t)) pairs.

    With generator_sign = +1 the generator minimises the loss and the regret is
    Σ_t L(σ_G^(t), σ_D^(t)) - min_σ Σ_t L(σ, σ_D^(t)); the minimum is attained at the projector onto the
    largest eigenvector of Σ_t σ_D^(t). With -1 the generator maximises and the orientation flips.
    """
    _check_history(history)
    rho = as_density_matrix(rho)
    disc_sum = sum(_sigma_D.matrix for _, _sigma_D in history)
    comparator = extreme_eig_projector(disc_sum, "max" if generator_sign > 0 else "min")
    played = sum(qmmw_loss(_sigma_G, _sigma_D, rho) for _sigma_G, _sigma_D in history)
    best = sum(qmmw_loss(comparator, _sigma_D, rho) for _, _sigma_D in history)
    return float(played - best) if generator_sign > 0 else float(best - played)


def empirical_discriminator_regret(history: History, rho: DensityMatrix, discriminator_sign: int = +1) -> float:
    """
    Exact regret of the discriminator. With discriminator_sign = +1 the discriminator maximises the loss and the
    regret is max_σ Σ_t L(σ_G^(t), σ) - Σ_t L(σ_G^(t), σ_D^(t)), attained at the projector onto the largest
    eigenvector of Σ_t (ρ - σ_G^(t)). With -1 the comparator is the smallest eigenvector and the orientation flips.
    """
    _check_history(history)
    rho = as_density_matrix(rho)
    gen_sum = sum(rho.matrix - _sigma_G.matrix for _sigma_G, _ in history)
    comparator = extreme_eig_projector(gen_sum, "max" if discriminator_sign > 0 else "min")
    played = sum(qmmw_loss(_sigma_G, _sigma_D, rho) for _sigma_G, _sigma_D in history)
    best = sum(qmmw_loss(_sigma_G, comparator, rho) for _sigma_G, _ in history)
    return float(best - played) if discriminator_sign > 0 else float(played - best)


def regret_rates(history: History, rho: DensityMatrix, generator_sign: int = +1,
                 discriminator_sign: int = +1) -> Tuple[float, float]:
    """
    :return: both regrets divided by the number of rounds in the history
    """
    rounds = len(history)
    return (empirical_generator_regret(history, rho, generator_sign) / rounds,
            empirical_discriminator_regret(history, rho, discriminator_sign) / rounds)


def is_non_increasing_on_average(rates, tolerance: float = 1e-12) -> bool:
    """
    True if a sequence of regret rates (ordered by increasing T) never grows by more than tolerance.
    """
    rates = np.asarray(rates, dtype=float)
    return bool(np.all(np.diff(rates) <= tolerance))
