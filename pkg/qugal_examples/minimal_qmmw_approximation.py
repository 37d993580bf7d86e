# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import qugal as qg
from qugal.utils.constants import ResolvedConventions
import matplotlib.pyplot as plt

# If VISUALIZE is set to True, the fidelity and loss curves will be plotted
VISUALIZE = True

ROUNDS = 1600
rho = qg.STATE_LIBRARY.rho_sep_4q()

config = qg.QmmwConfig(n_qubits=rho.n_qubits, rounds=ROUNDS,
                       generator_sign=ResolvedConventions.QMMW_GENERATOR_SIGN,
                       discriminator_sign=ResolvedConventions.QMMW_DISCRIMINATOR_SIGN,
                       epsilon_scale=ResolvedConventions.QMMW_EPSILON_SCALE,
                       fidelity_squared=ResolvedConventions.QMMW_FIDELITY_SQUARED,
                       record_interval=10)
trace, sigma_G, sigma_D = qg.run_qmmw(rho, config)

bound = qg.theorem1_bound(config.n_qubits, config.rounds)
print(f"epsilon = {config.epsilon:.4f}")
print(f"final loss {trace.final_loss:.5f}, |L - 1/2| = {abs(trace.final_loss - 0.5):.5f} <= {bound:.5f}")
print(f"fidelity of the averaged generator state: {trace.final_fidelity:.5f}")

if VISUALIZE:
    plt.figure(figsize=(8, 3.5))
    plt.subplot(121)
    plt.title("loss")
    plt.plot(trace.rounds, trace.losses)
    plt.axhline(0.5, color="k", linestyle="--")
    plt.xlabel("round")
    plt.subplot(122)
    plt.title("fidelity")
    plt.plot(trace.rounds, trace.fidelities)
    plt.xlabel("round")
    plt.tight_layout()
    plt.show()
