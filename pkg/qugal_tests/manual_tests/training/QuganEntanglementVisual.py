# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import os
import matplotlib.pyplot as plt
import numpy as np
from qugal.core.experiment import run_experiment
from qugal.utils import Tags
from qugal_tests.manual_tests import ManualIntegrationTestClass


class QuganEntanglementVisual(ManualIntegrationTestClass):
    """
    Trains the restricted QuGAN on the product state psi-sep and on the GHZ state for five seeds each.
    The psi-sep losses have to settle around 1/2 (separable) for at least 4 seeds, and the GHZ losses have to stay
    above 0.7 for at least 4 seeds, with every GHZ run reported entangled.
    """

    def setup(self):
        self.SEEDS = range(5)
        self.TARGETS = ["psi-sep", "ghz-4q"]
        self.records = {_target: [] for _target in self.TARGETS}

    def perform_test(self):
        for target in self.TARGETS:
            for seed in self.SEEDS:
                settings = self.experiment_settings(Tags.EXPERIMENT_QUGAN_ENTANGLEMENT_TEST, f"{target}_{seed}", {
                    Tags.TARGET_STATE: target,
                    Tags.RANDOM_SEED: seed
                })
                record = run_experiment(settings)
                self.records[target].append(record)
                details = record.summary["details"]
                print(f"{target} seed {seed}: {record.summary['verdict']}, "
                      f"post burn-in mean loss {details['post_burn_in_mean_loss']:.4f}, "
                      f"terminal fidelity {details['terminal_fidelity']:.4f}")

        details = {_target: [_record.summary["details"] for _record in self.records[_target]]
                   for _target in self.TARGETS}
        settled = sum(0.40 <= _details["post_burn_in_mean_loss"] <= 0.60 and _details["terminal_fidelity"] >= 0.65
                      for _details in details["psi-sep"])
        self.require_pass_rate("psi-sep seeds settled near 1/2 with fidelity >= 0.65", settled, len(self.SEEDS), 4)
        separated = sum(_details["post_burn_in_mean_loss"] >= 0.70 and _details["terminal_fidelity"] <= 0.35
                        for _details in details["ghz-4q"])
        self.require_pass_rate("ghz-4q seeds with loss >= 0.70 and fidelity <= 0.35", separated, len(self.SEEDS), 4)
        entangled = [_record.summary["verdict"] for _record in self.records["ghz-4q"]].count(Tags.DECISION_ENTANGLED)
        self.require_pass_rate("ghz-4q seeds reported entangled", entangled, len(self.SEEDS), len(self.SEEDS))

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        plt.figure(figsize=(10, 4))
        plt.suptitle("QuGAN entanglement test, 2|2 split")
        for index, target in enumerate(self.TARGETS):
            plt.subplot(1, 2, index + 1)
            plt.title(target)
            for seed, record in zip(self.SEEDS, self.records[target]):
                frame = record.trace_frame
                plt.plot(frame["round"], frame["loss"], label=f"seed {seed}", linewidth=0.8)
            threshold = self.records[target][0].summary["bounds"]["threshold"]
            rounds = self.records[target][0].trace_frame["round"]
            plt.fill_between(rounds, 0.5 - threshold, 0.5 + threshold, color="grey", alpha=0.2)
            plt.axhline(0.5, color="k", linestyle="--")
            plt.ylim(0, 1)
            plt.xlabel("round")
            plt.ylabel("loss")
            plt.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "qugan_entanglement.png"))
        plt.close()

        for target in self.TARGETS:
            verdicts = [_record.summary["verdict"] for _record in self.records[target]]
            fidelities = [_record.summary["final_fidelity"] for _record in self.records[target]]
            print(f"{target}: {verdicts.count(Tags.DECISION_SEPARABLE)} of {len(verdicts)} separable, "
                  f"mean terminal fidelity {np.mean(fidelities):.4f}")


if __name__ == '__main__':
    test = QuganEntanglementVisual()
    test.run_test(show_figure_on_screen=False)
