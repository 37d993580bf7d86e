# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.utils import Tags
from .qmmw_approximation_experiment import QmmwApproximationExperiment
from .qmmw_entanglement_experiment import QmmwEntanglementExperiment
from .qugan_entanglement_experiment import QuganEntanglementExperiment
from .regret_audit_experiment import RegretAuditExperiment, parse_round_counts
from .sign_resolution_experiment import SignResolutionExperiment, select_candidate
from .targets import resolve_target

EXPERIMENT_REGISTRY = {
    Tags.EXPERIMENT_QMMW_APPROXIMATION: QmmwApproximationExperiment,
    Tags.EXPERIMENT_QMMW_ENTANGLEMENT_TEST: QmmwEntanglementExperiment,
    Tags.EXPERIMENT_QUGAN_ENTANGLEMENT_TEST: QuganEntanglementExperiment,
    Tags.EXPERIMENT_REGRET_AUDIT: RegretAuditExperiment,
    Tags.EXPERIMENT_SIGN_RESOLUTION: SignResolutionExperiment,
}
