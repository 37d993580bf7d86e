# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import h5py
import numpy as np
from qugal.io_handling.serialization import SERIALIZATION_MAP
from qugal.log import Logger
from qugal.utils.serializer import SerializableQuGALClass

logger = Logger()

NONE_MARKER = "None"
LIST_GROUP = "list"


def _write_dataset(h5file, path: str, item, compression: str = None):
    if path in h5file:
        del h5file[path]
    if isinstance(item, np.ndarray) and item.ndim > 0:
        h5file.create_dataset(path, data=item, compression=compression)
    else:
        h5file[path] = item


def save_hdf5(save_item, file_path: str, file_dictionary_path: str = "/", file_compression: str = None):
    """
    Saves a dictionary with arbitrary content, or a SerializableQuGALClass, to an hdf5 file.
    Complex arrays are stored as native complex datasets.

    :param save_item: dictionary or serializable object to save
    :param file_path: path of the hdf5 file
    :param file_dictionary_path: group in the file to store the item in; "/" overwrites the file
    :param file_compression: optional compression of array datasets (gzip, lzf or szip)
    """

    def data_grabber(h5file, path, data_dictionary):
        for key, item in data_dictionary.items():
            key = str(key)
            if isinstance(item, SerializableQuGALClass):
                data_grabber(h5file, path + key + "/", item.serialize())
            elif item is None:
                _write_dataset(h5file, path + key, NONE_MARKER)
            elif isinstance(item, (list, tuple)):
                data_grabber(h5file, path + key + "/" + LIST_GROUP + "/",
                             {str(_i): _item for _i, _item in enumerate(item)})
            elif isinstance(item, dict):
                data_grabber(h5file, path + key + "/", item)
            else:
                try:
                    _write_dataset(h5file, path + key, item, file_compression)
                except (TypeError, RuntimeError) as e:
                    logger.critical(f"The item {item} of type {type(item)} under '{path + key}' could not be "
                                    f"written to HDF5: {e}")
                    raise e

    writing_mode = "w" if file_dictionary_path == "/" else "a"
    if isinstance(save_item, SerializableQuGALClass):
        save_item = save_item.serialize()
    if not isinstance(save_item, dict):
        save_key = file_dictionary_path.rstrip("/").split("/")[-1]
        file_dictionary_path = "/".join(file_dictionary_path.rstrip("/").split("/")[:-1]) + "/"
        save_item = {save_key: save_item}
    with h5py.File(file_path, writing_mode) as h5file:
        data_grabber(h5file, file_dictionary_path, save_item)


def _read_dataset(dataset):
    item = dataset[()]
    if isinstance(item, bytes):
        item = item.decode("utf-8")
        return None if item == NONE_MARKER else item
    if isinstance(item, np.bool_):
        return bool(item)
    return item


def load_hdf5(file_path: str, file_dictionary_path: str = "/"):
    """
    Loads a dictionary from an hdf5 file. Groups named after a class in the SERIALIZATION_MAP are deserialized
    into instances of that class, "list" groups into python lists.

    :param file_path: path of the hdf5 file
    :param file_dictionary_path: group in the file to load
    :returns: dictionary, list, object or array
    """

    def data_grabber(h5file, path):
        node = h5file[path.rstrip("/") or "/"]
        if isinstance(node, h5py.Dataset):
            return _read_dataset(node)
        path = path if path.endswith("/") else path + "/"

        dictionary = {}
        for key, item in node.items():
            if isinstance(item, h5py.Dataset):
                dictionary[key] = _read_dataset(item)
            elif key in SERIALIZATION_MAP:
                return SERIALIZATION_MAP[key].deserialize(data_grabber(h5file, path + key + "/"))
            elif key == LIST_GROUP:
                return [data_grabber(h5file, path + key + "/" + _index)
                        for _index in sorted(item.keys(), key=int)]
            else:
                dictionary[key] = data_grabber(h5file, path + key + "/")
        return dictionary

    with h5py.File(file_path, "r") as h5file:
        return data_grabber(h5file, file_dictionary_path)
