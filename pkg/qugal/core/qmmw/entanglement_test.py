# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from numbers import Real
from typing import Union
import numpy as np
from qugal.core.linalg import DensityMatrix, PureState, BipartiteSplit, partial_trace, tensor_product, \
    as_density_matrix
from qugal.core.qmmw.qmmw_algorithm import QmmwConfig, run_qmmw_loop, theorem1_bound
from qugal.core.qmmw.training_trace import TrainingTrace
from qugal.log import Logger
from qugal.utils.constants import QmmwDefaults
from qugal.utils.tags import Tags
from qugal.utils.quality_assurance.data_sanity_testing import DimensionMismatchError

logger = Logger()


def constrain_product(sigma: DensityMatrix, split: BipartiteSplit) -> DensityMatrix:
    """
    Tr_B(σ) ⊗ Tr_A(σ), i.e. the product of both marginals in A⊗B order.

    :raises DimensionMismatchError: if the split does not match sigma
    """
    sigma = as_density_matrix(sigma)
    split.check_compatible(sigma.n_qubits)
    return tensor_product(partial_trace(sigma, split.dims, keep=0), partial_trace(sigma, split.dims, keep=1))


def resolve_qmmw_threshold(threshold: Union[float, str], n_qubits: int, rounds: int) -> float:
    """
    "auto" gives sqrt(N/T), "theorem" gives theorem1_bound(N, T) + 0.05, numbers are used as given.
    """
    if isinstance(threshold, str):
        if threshold == Tags.THRESHOLD_AUTO:
            return theorem1_bound(n_qubits, rounds) / 3
        if threshold == Tags.THRESHOLD_THEOREM:
            return theorem1_bound(n_qubits, rounds) + QmmwDefaults.THEOREM_THRESHOLD_MARGIN
        raise ValueError(f"Unknown threshold rule '{threshold}'.")
    if not isinstance(threshold, Real) or not np.isfinite(threshold) or threshold < 0:
        raise ValueError(f"The threshold has to be a non-negative number, but was {threshold}.")
    return float(threshold)


class EntanglementVerdict:
    """
    Outcome of the constrained QMMW entanglement test. The decision is separable iff terminal_gap <= threshold_used.
    """

    def __init__(self, terminal_gap: float, threshold_used: float, trace: TrainingTrace,
                 sigma_G_bar: DensityMatrix = None, sigma_D_bar: DensityMatrix = None):
        self.terminal_gap = float(terminal_gap)
        self.threshold_used = float(threshold_used)
        self.trace = trace
        self.sigma_G_bar = sigma_G_bar
        self.sigma_D_bar = sigma_D_bar
        self.decision = Tags.DECISION_SEPARABLE if self.terminal_gap <= self.threshold_used \
            else Tags.DECISION_ENTANGLED

    @property
    def is_separable(self) -> bool:
        return self.decision == Tags.DECISION_SEPARABLE

    def __repr__(self):
        return (f"EntanglementVerdict({self.decision}, gap={self.terminal_gap:.4f}, "
                f"threshold={self.threshold_used:.4f})")


def run_entanglement_qmmw(psi: PureState, split: BipartiteSplit, config: QmmwConfig,
                          threshold: Union[float, str] = Tags.THRESHOLD_AUTO) -> EntanglementVerdict:
    """
    QMMW on |ψ><ψ| with every generator iterate projected onto the product of its marginals.
    A separable target lets the loss approach ½; an entangled one leaves a gap.
    """
    if not isinstance(psi, PureState):
        raise TypeError(f"The entanglement test needs a PureState target, got {type(psi).__name__}.")
    split.check_compatible(psi.n_qubits)
    if config.n_qubits != psi.n_qubits:
        raise DimensionMismatchError(f"The configuration expects {config.n_qubits} qubits, psi has "
                                     f"{psi.n_qubits}.")
    threshold_used = resolve_qmmw_threshold(threshold, config.n_qubits, config.rounds)

    logger.info(f"Running constrained QMMW entanglement test with split {split}...")
    trace, sigma_G_bar, sigma_D_bar = run_qmmw_loop(psi.to_density_matrix(), config,
                                                    constraint=lambda sigma: constrain_product(sigma, split))
    verdict = EntanglementVerdict(abs(trace.final_loss - 0.5), threshold_used, trace, sigma_G_bar, sigma_D_bar)
    logger.info(f"Running constrained QMMW entanglement test with split {split}...[Done] {verdict}")
    return verdict
