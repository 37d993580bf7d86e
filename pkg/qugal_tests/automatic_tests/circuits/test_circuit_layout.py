# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import unittest
import numpy as np
from qugal.core.circuits import CircuitLayout, ParameterVector, Gate, RX, RY, RZ, CNOT, build_generator_layout, \
    build_discriminator_layout
from qugal.core.linalg import BipartiteSplit
from qugal.utils.quality_assurance import DimensionMismatchError


class TestGate(unittest.TestCase):

    def test_line_format(self):
        self.assertEqual(Gate(RY, 2, param_index=7).to_line(), "RY 2 - 7")
        self.assertEqual(Gate(CNOT, 1, control=0).to_line(), "CNOT 1 0 -")
        self.assertEqual(Gate.from_line("CNOT 1 0 -"), Gate(CNOT, 1, control=0))

    @unittest.expectedFailure
    def test_cnot_with_parameter(self):
        Gate(CNOT, 1, control=0, param_index=0)

    @unittest.expectedFailure
    def test_cnot_on_itself(self):
        Gate(CNOT, 1, control=1)

    @unittest.expectedFailure
    def test_rotation_without_parameter(self):
        Gate(RX, 0)

    @unittest.expectedFailure
    def test_unknown_kind(self):
        Gate("H", 0, param_index=0)


class TestParameterVector(unittest.TestCase):

    def test_shifted_leaves_original(self):
        theta = ParameterVector([0.1, 0.2, 0.3])
        shifted = theta.shifted(1, 0.5)
        self.assertAlmostEqual(shifted[1], 0.7, places=15)
        self.assertEqual(theta[1], 0.2)
        self.assertEqual(len(shifted), 3)
        with self.assertRaises(ValueError):
            theta.values[0] = 1.0

    @unittest.expectedFailure
    def test_shift_out_of_range(self):
        ParameterVector([0.1]).shifted(1, 0.5)

    @unittest.expectedFailure
    def test_not_finite(self):
        ParameterVector([0.1, np.nan])


class TestCircuitLayout(unittest.TestCase):

    def test_restricted_generator_counts(self):
        layout = build_generator_layout(4, 0, 7, BipartiteSplit(2, 2))
        self.assertEqual(layout.gate_counts(), {"single_qubit": 84, "cnot": 14, "total": 98})
        self.assertEqual(layout.n_params, 84)
        self.assertEqual(layout.n_blocks, 7)

    def test_restricted_generator_has_no_crossing_cnot(self):
        for split in (BipartiteSplit(2, 2), BipartiteSplit(1, 3), BipartiteSplit(3, 1)):
            layout = build_generator_layout(4, 0, 2, split)
            for gate in layout.cnot_gates():
                self.assertEqual(gate.control < split.n_a, gate.target < split.n_a)

    def test_unrestricted_generator_counts(self):
        layout = build_generator_layout(4, 0, 7)
        self.assertEqual(layout.gate_counts(), {"single_qubit": 84, "cnot": 21, "total": 105})

    def test_generator_with_ancilla(self):
        layout = build_generator_layout(2, 1, 2)
        self.assertEqual(layout.n_qubits, 3)
        self.assertEqual(layout.n_params, 18)

    def test_discriminator_counts(self):
        layout = build_discriminator_layout(4, 3)
        self.assertEqual(layout.n_qubits, 5)
        self.assertEqual(layout.gate_counts(), {"single_qubit": 45, "cnot": 12, "total": 57})
        for block in range(layout.n_blocks):
            last_gate = layout.gates[layout.block_boundaries[block + 1] - 1]
            self.assertEqual(last_gate.kind, CNOT)
            self.assertEqual(last_gate.target, 4)

    def test_text_round_trip(self):
        layout = build_generator_layout(4, 0, 3, BipartiteSplit(1, 3))
        self.assertEqual(CircuitLayout.from_text(layout.to_text()), layout)

    def test_text_with_comments(self):
        text = "# a layout\nqubits 2\nblocks 0 3\nRX 0 - 0  # first\nRZ 1 - 1\nCNOT 1 0 -\n"
        layout = CircuitLayout.from_text(text)
        self.assertEqual(layout.n_params, 2)
        self.assertEqual(layout.gates[2], Gate(CNOT, 1, control=0))

    @unittest.expectedFailure
    def test_text_without_qubits(self):
        CircuitLayout.from_text("RX 0 - 0\n")

    def test_text_error_names_line(self):
        with self.assertRaises(ValueError) as context:
            CircuitLayout.from_text("qubits 1\nRX zero - 0\n")
        self.assertIn("line 2", str(context.exception))

    def test_gate_outside_register(self):
        with self.assertRaises(DimensionMismatchError):
            CircuitLayout(1, [Gate(CNOT, 1, control=0)])

    @unittest.expectedFailure
    def test_duplicate_parameter_index(self):
        CircuitLayout(1, [Gate(RX, 0, param_index=0), Gate(RY, 0, param_index=0)])

    @unittest.expectedFailure
    def test_blocks_differ(self):
        CircuitLayout(2, [Gate(RX, 0, param_index=0), Gate(RZ, 1, param_index=1)], [0, 1, 2])

    @unittest.expectedFailure
    def test_restricted_generator_with_ancilla(self):
        build_generator_layout(4, 1, 2, BipartiteSplit(2, 2))

    @unittest.expectedFailure
    def test_zero_blocks(self):
        build_discriminator_layout(2, 0)
