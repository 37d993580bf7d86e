# SPDX-FileCopyrightText: 2023 QuGAL developers
# SPDX-License-Identifier: MIT

import os
from typing import Union
from qugal.core.linalg import DensityMatrix, PureState
from qugal.io_handling.state_files import load_state_file
from qugal.log import Logger
from qugal.utils.libraries.state_library import STATE_LIBRARY

logger = Logger()


def resolve_target(target: str) -> Union[PureState, DensityMatrix]:
    """
    A target is either the name of a preset of the STATE_LIBRARY or the path to a state file.

    :raises KeyError: if it is neither a preset nor an existing file
    """
    if target in STATE_LIBRARY.names():
        logger.debug(f"Using the preset target '{target}'")
        return STATE_LIBRARY.get(target)
    if os.path.isfile(target):
        return load_state_file(target)
    msg = f"The target '{target}' is neither a state preset ({', '.join(STATE_LIBRARY.names())}) nor a file."
    logger.critical(msg)
    raise KeyError(msg)


def require_pure_target(target: Union[PureState, DensityMatrix], experiment: str) -> PureState:
    if not isinstance(target, PureState):
        msg = f"The experiment '{experiment}' needs a pure target state, got {target!r}."
        logger.critical(msg)
        raise ValueError(msg)
    return target
