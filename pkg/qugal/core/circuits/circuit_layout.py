# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from typing import List, Optional
import numpy as np
from qugal.core.circuits.gates import Gate, CNOT, ROTATION_KINDS
from qugal.core.linalg import BipartiteSplit
from qugal.utils.serializer import SerializableQuGALClass
from qugal.utils.quality_assurance.data_sanity_testing import DimensionMismatchError, assert_array_well_defined

LAYOUT_HEADER = "# qugal circuit layout"


class ParameterVector:
    """
    Frozen vector of rotation angles in radians.
    """

    def __init__(self, values):
        values = np.array(values, dtype=float).reshape(-1)
        assert_array_well_defined(values, array_name="parameter vector")
        values.setflags(write=False)
        self._values = values

    @property
    def values(self) -> np.ndarray:
        return self._values

    def shifted(self, index: int, delta: float):
        if not 0 <= index < len(self._values):
            raise IndexError(f"Parameter index {index} out of range for {len(self._values)} parameters.")
        values = self._values.copy()
        values[index] += delta
        return ParameterVector(values)

    def __len__(self):
        return len(self._values)

    def __getitem__(self, item):
        return self._values[item]

    def __eq__(self, other):
        return isinstance(other, ParameterVector) and np.array_equal(self._values, other.values)

    def __repr__(self):
        return f"ParameterVector({len(self._values)} angles)"


class CircuitLayout(SerializableQuGALClass):
    """
    Ordered gate list on n_qubits qubits, organised in repeated blocks.

    :param n_qubits: circuit width
    :param gates: the gates in application order
    :param block_boundaries: gate indices where the blocks start, followed by len(gates)
    """

    def __init__(self, n_qubits: int, gates: List[Gate], block_boundaries: Optional[List[int]] = None):
        if int(n_qubits) != n_qubits or n_qubits < 1:
            raise ValueError(f"A circuit needs at least one qubit, got {n_qubits}.")
        self.n_qubits = int(n_qubits)
        self.gates = tuple(gates)
        for gate in self.gates:
            if max(gate.qubits()) >= self.n_qubits:
                raise DimensionMismatchError(f"{gate} acts outside of the {self.n_qubits} qubit register.")

        param_indices = sorted(_g.param_index for _g in self.gates if _g.is_rotation)
        if param_indices != list(range(len(param_indices))):
            raise ValueError("Every parameter index has to be used exactly once and the indices have to be "
                             "0, ..., n_params - 1.")
        self.n_params = len(param_indices)

        if block_boundaries is None:
            block_boundaries = [0, len(self.gates)]
        block_boundaries = [int(_b) for _b in block_boundaries]
        if block_boundaries[0] != 0 or block_boundaries[-1] != len(self.gates) or \
                any(_b > _c for _b, _c in zip(block_boundaries[:-1], block_boundaries[1:])):
            raise ValueError(f"Invalid block boundaries {block_boundaries} for {len(self.gates)} gates.")
        self.block_boundaries = tuple(block_boundaries)
        self._check_identical_blocks()

    def _block_signature(self, block_index: int) -> tuple:
        start, end = self.block_boundaries[block_index], self.block_boundaries[block_index + 1]
        gates = self.gates[start:end]
        offsets = [_g.param_index for _g in gates if _g.is_rotation]
        first = min(offsets) if offsets else 0
        return tuple((_g.kind, _g.target, _g.control, None if _g.param_index is None else _g.param_index - first)
                     for _g in gates)

    def _check_identical_blocks(self):
        signatures = {self._block_signature(_i) for _i in range(self.n_blocks)}
        if len(signatures) > 1:
            raise ValueError("All blocks of a circuit layout need an identical gate arrangement.")

    @property
    def n_blocks(self) -> int:
        return len(self.block_boundaries) - 1

    def gate_counts(self) -> dict:
        single = sum(1 for _g in self.gates if _g.is_rotation)
        return {"single_qubit": single, "cnot": len(self.gates) - single, "total": len(self.gates)}

    def cnot_gates(self) -> List[Gate]:
        return [_g for _g in self.gates if _g.kind == CNOT]

    def to_text(self) -> str:
        lines = [LAYOUT_HEADER, f"qubits {self.n_qubits}",
                 "blocks " + " ".join(str(_b) for _b in self.block_boundaries)]
        lines += [_g.to_line() for _g in self.gates]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str):
        n_qubits, boundaries, gates = None, None, []
        for line_number, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                if line.startswith("qubits"):
                    n_qubits = int(line.split()[1])
                elif line.startswith("blocks"):
                    boundaries = [int(_b) for _b in line.split()[1:]]
                else:
                    gates.append(Gate.from_line(line))
            except (ValueError, IndexError) as e:
                raise ValueError(f"line {line_number}: {e}") from None
        if n_qubits is None:
            raise ValueError("The layout text does not declare the number of qubits.")
        return CircuitLayout(n_qubits, gates, boundaries)

    def __eq__(self, other):
        return isinstance(other, CircuitLayout) and self.n_qubits == other.n_qubits and \
            self.gates == other.gates and self.block_boundaries == other.block_boundaries

    def __repr__(self):
        return f"CircuitLayout(n_qubits={self.n_qubits}, gates={len(self.gates)}, n_params={self.n_params})"

    def serialize(self) -> dict:
        return {"CircuitLayout": {"layout": self.to_text()}}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        return CircuitLayout.from_text(dictionary_to_deserialize["layout"])


def _append_block(gates: list, qubits: range, ladders: list, next_param: int) -> int:
    for qubit in qubits:
        for kind in ROTATION_KINDS:
            gates.append(Gate(kind, qubit, param_index=next_param))
            next_param += 1
    for ladder in ladders:
        for control, target in zip(ladder[:-1], ladder[1:]):
            gates.append(Gate(CNOT, target, control=control))
    return next_param


def _repeated_blocks(width: int, ladders: list, blocks: int) -> CircuitLayout:
    if int(blocks) != blocks or blocks < 1:
        raise ValueError(f"A layout needs at least one block, got {blocks}.")
    gates, boundaries, next_param = [], [0], 0
    for _ in range(blocks):
        next_param = _append_block(gates, range(width), ladders, next_param)
        boundaries.append(len(gates))
    return CircuitLayout(width, gates, boundaries)


def build_generator_layout(n_data: int, n_ancilla: int, blocks: int,
                           restriction: Optional[BipartiteSplit] = None) -> CircuitLayout:
    """
    Generator circuit on n_data + n_ancilla qubits. Each block is an RX, RY, RZ layer on every qubit followed by
    a nearest-neighbour CNOT ladder (control q, target q + 1). With a bipartite restriction the ladder is split
    into one ladder inside A and one inside B, so no CNOT crosses the cut.

    :raises DimensionMismatchError: if the restriction does not match n_data or ancillas are requested with it
    """
    if n_data < 1 or n_ancilla < 0:
        raise DimensionMismatchError(f"Invalid generator widths: {n_data} data and {n_ancilla} ancilla qubits.")
    width = n_data + n_ancilla
    if restriction is None:
        ladders = [list(range(width))]
    else:
        restriction.check_compatible(n_data)
        if n_ancilla != 0:
            raise DimensionMismatchError("A bipartite restricted generator cannot use ancilla qubits.")
        ladders = [list(range(restriction.n_a)), list(range(restriction.n_a, width))]
    return _repeated_blocks(width, ladders, blocks)


def build_discriminator_layout(n_data: int, blocks: int) -> CircuitLayout:
    """
    Discriminator circuit on n_data + 1 qubits; the last qubit is the measured ancilla and the last CNOT of every
    block targets it.
    """
    if n_data < 1:
        raise DimensionMismatchError(f"The discriminator needs at least one data qubit, got {n_data}.")
    return _repeated_blocks(n_data + 1, [list(range(n_data + 1))], blocks)
