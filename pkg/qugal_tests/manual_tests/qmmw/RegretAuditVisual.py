# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import os
import matplotlib.pyplot as plt
from qugal.core.experiment import run_experiment
from qugal.utils import Tags
from qugal_tests.manual_tests import ManualIntegrationTestClass


class RegretAuditVisual(ManualIntegrationTestClass):
    """
    Plots the exact regret rates of both QMMW players against their bounds for T = 100, 400 and 1600.
    """

    def setup(self):
        self.record = None

    def perform_test(self):
        settings = self.experiment_settings(Tags.EXPERIMENT_REGRET_AUDIT, "regret_audit", {
            Tags.TARGET_STATE: "rho-sep-4q",
            Tags.AUDIT_ROUNDS: "100,400,1600"
        })
        self.record = run_experiment(settings)
        for row in self.record.summary["regret"]["horizons"]:
            print(row)

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        rows = self.record.summary["regret"]["horizons"]
        rounds = [_row["rounds"] for _row in rows]
        plt.figure(figsize=(5, 4))
        plt.title("QMMW regret rates")
        plt.loglog(rounds, [_row["generator_rate"] for _row in rows], "o-", label="generator")
        plt.loglog(rounds, [_row["generator_bound"] for _row in rows], "C0--", label="generator bound")
        plt.loglog(rounds, [_row["discriminator_rate"] for _row in rows], "s-", label="discriminator")
        plt.loglog(rounds, [_row["discriminator_bound"] for _row in rows], "C1--", label="discriminator bound")
        plt.xlabel("T")
        plt.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "regret_audit.png"))
        plt.close()


if __name__ == '__main__':
    test = RegretAuditVisual()
    test.run_test(show_figure_on_screen=False)
