# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from qugal.utils.tags import Tags
from qugal.utils.serializer import SerializableQuGALClass
from qugal.log import Logger


class Settings(dict, SerializableQuGALClass):
    """
    The Settings class is a dictionary that contains all relevant settings for running an experiment with QuGAL.
    It includes an automatic sanity check for input parameters using the qugal.utils.Tags class. \n
    Usage: Settings({Tags.KEY1: value1, Tags.KEY2: value2, ...})
    """

    def __init__(self, dictionary: dict = None, verbose: bool = True):
        super(Settings, self).__init__()
        self.logger = Logger()
        self.verbose = verbose
        if dictionary is None:
            dictionary = {}
        for key, value in dictionary.items():
            self.__setitem__(key, value)

    def __setitem__(self, key, value):
        if isinstance(key, str):
            super().__setitem__(key, value)
            if self.verbose:
                self.logger.warning(f"The key '{key}' is not a Tags entry; it is stored without a type check. "
                                    f"Use a tag of the form ('{key}', (type_1, type_2, ...)) instead.")
            return
        if not isinstance(key, tuple) or len(key) != 2:
            raise TypeError(f"The key for the Settings dictionary has to be a tag ('name', types), got {key!r}.")
        name, types = key
        # bool is an Integral; only boolean tags accept True and False
        is_flag_mismatch = isinstance(value, bool) and bool not in (types if isinstance(types, tuple) else (types,))
        if not isinstance(value, types) or is_flag_mismatch:
            raise ValueError(f"The value {value!r} ({type(value).__name__}) for the key '{name}' has to be an "
                             f"instance of {types}.")
        super().__setitem__(name, value)

    @staticmethod
    def _name(key) -> str:
        return key[0] if isinstance(key, tuple) else key

    def __contains__(self, item):
        return super().__contains__(self._name(item))

    def __getitem__(self, item):
        name = self._name(item)
        if not super().__contains__(name):
            raise KeyError(f"The key '{name}' is not in the Settings dictionary")
        return super().__getitem__(name)

    def __delitem__(self, key):
        name = self._name(key)
        if not super().__contains__(name):
            raise KeyError(f"The key '{name}' is not in the Settings dictionary")
        super().__delitem__(name)

    def get_value_or_default(self, tag: tuple, default):
        """
        :param tag: a settings tag
        :param default: the value that is returned if the tag is not in the settings
        """
        if tag in self:
            return self[tag]
        return default

    def as_plain_dict(self) -> dict:
        """
        :return: a copy with string keys and plain python values, sorted by key, suitable for JSON output.
        """
        return {key: self[key] for key in sorted(dict.keys(self))}

    def serialize(self):
        return {"Settings": dict(self)}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        settings = Settings(verbose=False)
        for key, value in dictionary_to_deserialize.items():
            if key in Tags.settings_keys():
                tag = Tags.from_name(key)
                # HDF5 returns numpy scalars
                if hasattr(value, "item"):
                    value = value.item()
                if isinstance(value, tag[1]):
                    settings[tag] = value
                    continue
            settings[key] = value
        return settings
