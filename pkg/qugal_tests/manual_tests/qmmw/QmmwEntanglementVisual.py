# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import os
import matplotlib.pyplot as plt
import numpy as np
from qugal.core.linalg import BipartiteSplit
from qugal.core.qmmw import QmmwConfig, run_entanglement_qmmw, resolve_qmmw_threshold
from qugal.utils import Tags, ResolvedConventions
from qugal_tests.manual_tests import ManualIntegrationTestClass
from qugal_tests.test_utils.problems import random_entanglement_instances


class QmmwEntanglementVisual(ManualIntegrationTestClass):
    """
    Runs the constrained QMMW test on 20 random product states and 20 random states of Schmidt rank >= 2 whose
    largest Schmidt coefficient is at most 0.9, all on a 2|2 split with T = 400.
    At least 18 of 20 verdicts of the auto threshold have to be correct on each side.
    """

    def setup(self):
        self.ROUNDS = 400
        self.INSTANCES = 20
        self.split = BipartiteSplit(2, 2)
        self.config = QmmwConfig(4, self.ROUNDS, generator_sign=ResolvedConventions.QMMW_GENERATOR_SIGN,
                                 discriminator_sign=ResolvedConventions.QMMW_DISCRIMINATOR_SIGN)
        self.product_states, self.entangled_states = random_entanglement_instances(self.INSTANCES)
        self.gaps = {}

    def perform_test(self):
        for name, states in (("product", self.product_states), ("entangled", self.entangled_states)):
            self.gaps[name] = np.array([run_entanglement_qmmw(_psi, self.split, self.config).terminal_gap
                                        for _psi in states])
        for rule in (Tags.THRESHOLD_AUTO, Tags.THRESHOLD_THEOREM):
            threshold = resolve_qmmw_threshold(rule, 4, self.ROUNDS)
            separable = int(np.sum(self.gaps["product"] <= threshold))
            entangled = int(np.sum(self.gaps["entangled"] > threshold))
            print(f"threshold '{rule}' = {threshold:.4f}: {separable}/{self.INSTANCES} product states separable, "
                  f"{entangled}/{self.INSTANCES} entangled states entangled")
            if rule == Tags.THRESHOLD_AUTO:
                self.require_pass_rate("product states reported separable", separable, self.INSTANCES, 18)
                self.require_pass_rate("entangled states reported entangled", entangled, self.INSTANCES, 18)
        print(f"largest product gap {np.max(self.gaps['product']):.4f}, "
              f"smallest entangled gap {np.min(self.gaps['entangled']):.4f}")

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        plt.figure(figsize=(6, 4))
        plt.title("Terminal gaps of the constrained QMMW test, 2|2 split")
        bins = np.linspace(0, max(np.max(self.gaps["entangled"]), 0.4), 30)
        plt.hist(self.gaps["product"], bins=bins, alpha=0.6, label="product")
        plt.hist(self.gaps["entangled"], bins=bins, alpha=0.6, label="Schmidt rank >= 2")
        for rule, style in ((Tags.THRESHOLD_AUTO, "k--"), (Tags.THRESHOLD_THEOREM, "k:")):
            threshold = resolve_qmmw_threshold(rule, 4, self.ROUNDS)
            plt.axvline(threshold, color=style[0], linestyle=style[1:], label=f"threshold '{rule}'")
        plt.xlabel("|L - 1/2|")
        plt.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "qmmw_entanglement.png"))
        plt.close()


if __name__ == '__main__':
    test = QmmwEntanglementVisual()
    test.run_test(show_figure_on_screen=False)
