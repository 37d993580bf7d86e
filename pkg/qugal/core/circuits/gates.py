# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import numpy as np

RX = "RX"
RY = "RY"
RZ = "RZ"
CNOT = "CNOT"
ROTATION_KINDS = (RX, RY, RZ)
GATE_KINDS = ROTATION_KINDS + (CNOT,)


class Gate:
    """
    A single gate of a parameterised circuit. Rotations R_P(θ) = exp(-iθP/2) read their angle from
    params[param_index]; a CNOT flips `target` if `control` is |1>.
    """
    __slots__ = ("kind", "target", "control", "param_index")

    def __init__(self, kind: str, target: int, control: int = None, param_index: int = None):
        if kind not in GATE_KINDS:
            raise ValueError(f"Unknown gate kind '{kind}', expected one of {GATE_KINDS}.")
        if target < 0:
            raise ValueError(f"Qubit indices cannot be negative, got target {target}.")
        if kind == CNOT:
            if control is None or param_index is not None:
                raise ValueError("A CNOT needs a control qubit and carries no parameter.")
            if control == target or control < 0:
                raise ValueError(f"Invalid CNOT control {control} for target {target}.")
        else:
            if control is not None or param_index is None or param_index < 0:
                raise ValueError(f"The rotation {kind} needs exactly one parameter index and no control.")
        self.kind = kind
        self.target = int(target)
        self.control = None if control is None else int(control)
        self.param_index = None if param_index is None else int(param_index)

    @property
    def is_rotation(self) -> bool:
        return self.kind != CNOT

    def qubits(self) -> tuple:
        return (self.target,) if self.control is None else (self.control, self.target)

    def to_line(self) -> str:
        control = "-" if self.control is None else str(self.control)
        param_index = "-" if self.param_index is None else str(self.param_index)
        return f"{self.kind} {self.target} {control} {param_index}"

    @staticmethod
    def from_line(line: str):
        fields = line.split()
        if len(fields) != 4:
            raise ValueError(f"A gate line needs four fields 'KIND target control param_index', got '{line}'.")
        kind, target, control, param_index = fields
        return Gate(kind, int(target), None if control == "-" else int(control),
                    None if param_index == "-" else int(param_index))

    def __eq__(self, other):
        return isinstance(other, Gate) and \
            (self.kind, self.target, self.control, self.param_index) == \
            (other.kind, other.target, other.control, other.param_index)

    def __hash__(self):
        return hash((self.kind, self.target, self.control, self.param_index))

    def __repr__(self):
        return f"Gate({self.to_line()})"


def rotation_matrices(kind: str, angles) -> np.ndarray:
    """
    :param kind: RX, RY or RZ
    :param angles: array of shape (B,)
    :return: the matrices exp(-iθP/2), shape (B, 2, 2)
    """
    angles = np.asarray(angles, dtype=float)
    cosine = np.cos(angles / 2)
    sine = np.sin(angles / 2)
    matrices = np.zeros(angles.shape + (2, 2), dtype=complex)
    if kind == RX:
        matrices[..., 0, 0] = cosine
        matrices[..., 1, 1] = cosine
        matrices[..., 0, 1] = -1j * sine
        matrices[..., 1, 0] = -1j * sine
    elif kind == RY:
        matrices[..., 0, 0] = cosine
        matrices[..., 1, 1] = cosine
        matrices[..., 0, 1] = -sine
        matrices[..., 1, 0] = sine
    elif kind == RZ:
        matrices[..., 0, 0] = np.exp(-0.5j * angles)
        matrices[..., 1, 1] = np.exp(0.5j * angles)
    else:
        raise ValueError(f"{kind} is not a rotation gate.")
    return matrices
