# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from numbers import Real
from typing import Tuple, Union
import numpy as np
from qugal.core.circuits import GanProblem, build_generator_layout, build_discriminator_layout, CircuitLayout, \
    generated_state
from qugal.core.linalg import PureState, BipartiteSplit
from qugal.core.training.gan_training import mw_train, baseline_train
from qugal.core.training.gan_training_trace import GanTrainingTrace
from qugal.core.training.trainer_config import TrainerConfig
from qugal.log import Logger
from qugal.utils.constants import QuganDefaults
from qugal.utils.tags import Tags

logger = Logger()


def resolve_qugan_threshold(threshold: Union[float, str]) -> float:
    if isinstance(threshold, str):
        if threshold == Tags.THRESHOLD_AUTO:
            return QuganDefaults.DECISION_THRESHOLD
        raise ValueError(f"Unknown threshold rule '{threshold}' for the QuGAN entanglement test.")
    if not isinstance(threshold, Real) or not np.isfinite(threshold) or threshold < 0:
        raise ValueError(f"The threshold has to be a non-negative number, but was {threshold}.")
    return float(threshold)


def analyze_terminal_band(losses, band_fraction: float = QuganDefaults.TERMINAL_BAND_FRACTION) \
        -> Tuple[int, float, float]:
    """
    The last ceil(band_fraction * T) losses define the terminal band [min, max]. The burn-in ends at the first
    round after which every loss stays inside that band.

    :return: (index of the first post-burn-in loss, band minimum, band maximum)
    """
    losses = np.asarray(losses, dtype=float)
    if losses.ndim != 1 or len(losses) == 0:
        raise ValueError("The loss history is empty.")
    if not 0 < band_fraction <= 1:
        raise ValueError(f"band_fraction has to lie in (0, 1], but was {band_fraction}.")
    window = int(np.ceil(band_fraction * len(losses)))
    band_min = float(np.min(losses[-window:]))
    band_max = float(np.max(losses[-window:]))
    outside = np.flatnonzero((losses < band_min) | (losses > band_max))
    first_inside = int(outside[-1]) + 1 if len(outside) > 0 else 0
    return first_inside, band_min, band_max


class QuganEntanglementReport:
    """
    Verdict of the restricted-generator QuGAN run. Separable iff the mean loss after the burn-in lies within
    threshold of ½.
    """

    def __init__(self, trace: GanTrainingTrace, burn_in: int, terminal_loss_band: Tuple[float, float],
                 threshold: float, gate_counts: dict = None):
        self.trace = trace
        self.burn_in = int(burn_in)
        self.terminal_loss_band = (float(terminal_loss_band[0]), float(terminal_loss_band[1]))
        self.threshold = float(threshold)
        self.gate_counts = gate_counts or {}
        self.theta = None
        self.gamma = None
        self.generated_state = None
        post_burn_in = trace.loss_array()[trace.rounds.index(self.burn_in):]
        self.post_burn_in_mean_loss = float(np.mean(post_burn_in))
        self.post_burn_in_min_fidelity = float(np.min(trace.fidelity_array()[trace.rounds.index(self.burn_in):]))
        self.terminal_fidelity = trace.final_fidelity
        self.decision = Tags.DECISION_SEPARABLE if abs(self.post_burn_in_mean_loss - 0.5) <= self.threshold \
            else Tags.DECISION_ENTANGLED

    @property
    def is_separable(self) -> bool:
        return self.decision == Tags.DECISION_SEPARABLE

    def summary(self) -> dict:
        return {"decision": self.decision, "burn_in": self.burn_in,
                "terminal_loss_band": list(self.terminal_loss_band),
                "post_burn_in_mean_loss": self.post_burn_in_mean_loss,
                "post_burn_in_min_fidelity": self.post_burn_in_min_fidelity,
                "terminal_fidelity": self.terminal_fidelity, "threshold": self.threshold}

    def __repr__(self):
        return (f"QuganEntanglementReport({self.decision}, mean loss={self.post_burn_in_mean_loss:.4f}, "
                f"burn-in={self.burn_in})")


def restricted_layouts(split: BipartiteSplit, blocks: Tuple[int, int]) -> Tuple[CircuitLayout, CircuitLayout]:
    generator_blocks, discriminator_blocks = blocks
    gen_layout = build_generator_layout(split.n_qubits, 0, generator_blocks, restriction=split)
    disc_layout = build_discriminator_layout(split.n_qubits, discriminator_blocks)
    return gen_layout, disc_layout


def run_entanglement_qugan(psi: PureState, split: BipartiteSplit, trainer: TrainerConfig,
                           blocks: Tuple[int, int] = (QuganDefaults.GENERATOR_BLOCKS,
                                                      QuganDefaults.DISCRIMINATOR_BLOCKS),
                           threshold: Union[float, str] = Tags.THRESHOLD_AUTO,
                           band_fraction: float = QuganDefaults.TERMINAL_BAND_FRACTION,
                           training_method: str = Tags.TRAINING_METHOD_MULTIPLICATIVE_WEIGHTS) \
        -> QuganEntanglementReport:
    """
    Trains a generator without CNOTs across the A|B cut against |ψ><ψ|. A product generator can reproduce a
    separable target, pushing the loss towards ½; an entangled target keeps the discriminator ahead.
    """
    if not isinstance(psi, PureState):
        raise TypeError(f"The entanglement test needs a PureState target, got {type(psi).__name__}.")
    split.check_compatible(psi.n_qubits)
    threshold_used = resolve_qugan_threshold(threshold)
    gen_layout, disc_layout = restricted_layouts(split, blocks)
    problem = GanProblem(psi)

    logger.info(f"Running the QuGAN entanglement test for split {split}...")
    if training_method == Tags.TRAINING_METHOD_MULTIPLICATIVE_WEIGHTS:
        theta, gamma, trace = mw_train(problem, gen_layout, disc_layout, trainer)
    elif training_method == Tags.TRAINING_METHOD_BASELINE:
        theta, gamma, trace = baseline_train(problem, gen_layout, disc_layout, trainer)
    else:
        raise ValueError(f"Unknown training method '{training_method}'.")

    first_inside, band_min, band_max = analyze_terminal_band(trace.losses, band_fraction)
    gate_counts = {"generator": gen_layout.gate_counts(), "discriminator": disc_layout.gate_counts(),
                   "total": gen_layout.gate_counts()["total"] + disc_layout.gate_counts()["total"]}
    report = QuganEntanglementReport(trace, trace.rounds[first_inside], (band_min, band_max), threshold_used,
                                     gate_counts)
    report.theta, report.gamma = theta, gamma
    report.generated_state = generated_state(gen_layout, theta, split.n_qubits, 0)
    logger.info(f"Running the QuGAN entanglement test for split {split}...[Done] {report}")
    return report
