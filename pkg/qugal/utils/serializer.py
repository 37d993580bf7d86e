# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from abc import ABC, abstractmethod


class SerializableQuGALClass(ABC):
    """
    Classes that can be written to and restored from the HDF5 run archives.
    serialize() returns a dictionary with the class name as its single key, so that
    qugal.io_handling.load_hdf5 can look the class up in the SERIALIZATION_MAP.
    """

    @abstractmethod
    def serialize(self) -> dict:
        pass

    @staticmethod
    @abstractmethod
    def deserialize(dictionary_to_deserialize: dict):
        pass
