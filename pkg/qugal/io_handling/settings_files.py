# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

from numbers import Integral, Real
from typing import Iterable
from qugal.log import Logger
from qugal.utils.settings import Settings
from qugal.utils.tags import Tags

logger = Logger()

TRUE_VALUES = ("true", "yes", "on", "1")
FALSE_VALUES = ("false", "no", "off", "0")


def coerce_value(tag: tuple, text: str):
    """
    Converts the textual value of a configuration entry into the type the tag asks for.

    :raises ValueError: if the text cannot be read as that type
    """
    name, types = tag
    types = types if isinstance(types, tuple) else (types,)
    text = text.strip()
    if bool in types:
        if text.lower() in TRUE_VALUES:
            return True
        if text.lower() in FALSE_VALUES:
            return False
        raise ValueError(f"'{name}' expects true or false, got '{text}'.")
    if Integral in types:
        try:
            return int(text)
        except ValueError:
            raise ValueError(f"'{name}' expects an integer, got '{text}'.") from None
    if Real in types:
        try:
            return float(text)
        except ValueError:
            if str in types:
                return text
            raise ValueError(f"'{name}' expects a number, got '{text}'.") from None
    return text


def parse_assignment(assignment: str) -> tuple:
    """
    :param assignment: a "key=value" string
    :return: (tag, coerced value)
    :raises ValueError: if there is no '='
    :raises KeyError: for unknown keys
    """
    if "=" not in assignment:
        raise ValueError(f"Expected 'key=value', got '{assignment}'.")
    key, value = assignment.split("=", 1)
    tag = Tags.from_name(key.strip())
    return tag, coerce_value(tag, value)


def load_settings_file(file_path: str, settings: Settings = None) -> Settings:
    """
    Reads a flat key=value configuration file. Blank lines and everything after '#' are ignored.

    :raises ValueError: with the line number for malformed lines
    :raises KeyError: for unknown keys
    """
    if settings is None:
        settings = Settings()
    with open(file_path, "r") as config_file:
        for line_number, line in enumerate(config_file, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                tag, value = parse_assignment(line)
            except ValueError as e:
                raise ValueError(f"{file_path}:{line_number}: {e}") from None
            except KeyError as e:
                raise KeyError(f"{file_path}:{line_number}: {e.args[0]}") from None
            settings[tag] = value
    logger.debug(f"Loaded {len(settings)} settings from {file_path}")
    return settings


def apply_overrides(settings: Settings, assignments: Iterable[str]) -> Settings:
    """
    Applies `--set key=value` overrides on top of the settings.
    """
    for assignment in assignments or []:
        tag, value = parse_assignment(assignment)
        logger.debug(f"Override {tag[0]} = {value!r}")
        settings[tag] = value
    return settings
