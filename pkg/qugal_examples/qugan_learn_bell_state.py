# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np
import qugal as qg
from qugal.utils import Tags
from qugal.utils.constants import ResolvedConventions
import matplotlib.pyplot as plt

# If VISUALIZE is set to True, the loss and fidelity curves of both trainers will be plotted
VISUALIZE = True
RANDOM_SEED = 471

bell = qg.PureState(np.array([1, 0, 0, 1]) / np.sqrt(2))
problem = qg.GanProblem(bell)

# An unrestricted generator may entangle the two qubits, the discriminator measures one extra ancilla.
generator_layout = qg.build_generator_layout(n_data=2, n_ancilla=0, blocks=2)
discriminator_layout = qg.build_discriminator_layout(n_data=2, blocks=2)
print(generator_layout.to_text())

config = qg.TrainerConfig(rounds=200, seed=RANDOM_SEED,
                          generator_direction=ResolvedConventions.QUGAN_GENERATOR_DIRECTION,
                          discriminator_direction=ResolvedConventions.QUGAN_DISCRIMINATOR_DIRECTION)

traces = {}
theta, gamma, traces[Tags.TRAINING_METHOD_MULTIPLICATIVE_WEIGHTS] = qg.mw_train(problem, generator_layout,
                                                                               discriminator_layout, config)
_, _, traces[Tags.TRAINING_METHOD_BASELINE] = qg.baseline_train(problem, generator_layout, discriminator_layout,
                                                                config)

for method, trace in traces.items():
    print(f"{method}: final loss {trace.final_loss:.4f}, final fidelity {trace.final_fidelity:.4f}")

sigma_G = qg.generated_state(generator_layout, theta, n_data=2, n_ancilla=0)
print(f"Populations of the generated state: {np.round(np.real(np.diag(sigma_G.matrix)), 3)}")
print(f"Fidelity with the Bell state: {qg.fidelity(bell, sigma_G):.4f}")

if VISUALIZE:
    plt.figure(figsize=(8, 3.5))
    for index, column in enumerate(["loss", "fidelity"]):
        plt.subplot(1, 2, index + 1)
        plt.title(column)
        for method, trace in traces.items():
            frame = trace.to_data_frame()
            plt.plot(frame["round"], frame[column], label=method)
        plt.xlabel("round")
        plt.legend()
    plt.tight_layout()
    plt.show()
