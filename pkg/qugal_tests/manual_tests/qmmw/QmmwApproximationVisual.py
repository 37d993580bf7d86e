# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import os
import matplotlib.pyplot as plt
from qugal.core.experiment import run_experiment
from qugal.utils import Tags
from qugal_tests.manual_tests import ManualIntegrationTestClass


class QmmwApproximationVisual(ManualIntegrationTestClass):
    """
    Runs the QMMW approximation of the separable 4-qubit target for a growing number of rounds and shows
    the fidelity curves next to the terminal gap |L - 1/2| and the bound 3 sqrt(N/T).
    The fidelity should grow with T and every gap has to stay below its bound.
    """

    def setup(self):
        self.ROUNDS = [100, 400, 1600]
        self.records = {}

    def perform_test(self):
        for rounds in self.ROUNDS:
            settings = self.experiment_settings(Tags.EXPERIMENT_QMMW_APPROXIMATION, f"approx_T{rounds}", {
                Tags.TARGET_STATE: "rho-sep-4q",
                Tags.ROUNDS: rounds,
                Tags.RECORD_INTERVAL: max(1, rounds // 100),
                Tags.AUDIT_REGRET: False
            })
            self.records[rounds] = run_experiment(settings)

        for rounds, record in self.records.items():
            bounds = record.summary["bounds"]
            gap = bounds["loss_gap"]
            print(f"T = {rounds:5d}: fidelity {record.summary['final_fidelity']:.4f}, "
                  f"gap {gap:.4f} <= bound {bounds['theorem1_bound']:.4f}: {gap <= bounds['theorem1_bound']}")

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        plt.figure(figsize=(10, 4))
        plt.suptitle("QMMW approximation of rho-sep-4q")
        plt.subplot(121)
        plt.title("Fidelity per round")
        for rounds, record in self.records.items():
            frame = record.trace_frame
            plt.plot(frame["round"], frame["fidelity"], label=f"T = {rounds}")
        plt.xscale("log")
        plt.xlabel("round")
        plt.ylabel("root fidelity")
        plt.legend()
        plt.subplot(122)
        plt.title("Terminal gap and bound")
        gaps = [_record.summary["bounds"]["loss_gap"] for _record in self.records.values()]
        bounds = [_record.summary["bounds"]["theorem1_bound"] for _record in self.records.values()]
        plt.loglog(self.ROUNDS, gaps, "o-", label="|L - 1/2|")
        plt.loglog(self.ROUNDS, bounds, "k--", label="3 sqrt(N/T)")
        plt.xlabel("T")
        plt.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "qmmw_approximation.png"))
        plt.close()


if __name__ == '__main__':
    test = QmmwApproximationVisual()
    test.run_test(show_figure_on_screen=False)
